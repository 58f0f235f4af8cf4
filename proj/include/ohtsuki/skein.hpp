#pragma once

/// Jones and Conway polynomials, X = V/(t^{1/2}+t^{-1/2})^{#L-1}, and the
/// sublink alternating sum Phi with its derivatives at t = 1.
///
/// Normalizations: V(O) = 1 with t V(L+) - t^-1 V(L-) = (t^{1/2} - t^{-1/2}) V(L0);
/// this is (-1)^{#L-1} times the usual Jones polynomial at t^-1. The Conway
/// polynomial satisfies grad(L+) - grad(L-) = -z grad(L0), i.e. the usual
/// one times (-1)^{#L-1}.

#include "ohtsuki/diagram_ops.hpp"
#include "ohtsuki/errors.hpp"
#include "ohtsuki/invariant_cache.hpp"
#include "ohtsuki/kauffman.hpp"
#include "ohtsuki/laurent.hpp"
#include "ohtsuki/link_diagram.hpp"
#include "ohtsuki/poly_z.hpp"
#include "ohtsuki/series.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ohtsuki {

struct SkeinConfig {
  BracketLimits bracket;
  int max_conway_crossings = 40;
  InvariantCache* cache = nullptr;
};

/// Writhe-normalized bracket mapped to V in the normalization used here.
inline HalfLaurent jones_from_bracket(const Laurent<BigInt>& bracket, int writhe, int components) {
  // f(A) = (-A^3)^-w <D>; V(t) = (-1)^{#L-1} f(t^{1/4}); A^k becomes twice-exponent k/2
  HalfLaurent v;
  const bool negate = ((writhe + components - 1) % 2 + 2) % 2 == 1;
  for (const auto& [k, c] : bracket.terms()) {
    const int e = k - 3 * writhe;
    if (e % 2 != 0) throw InvariantViolation("bracket exponent not compatible with t^{1/2}");
    v.add_term(e / 2, negate ? BigInt(-c) : c);
  }
  return v;
}

inline HalfLaurent jones(const LinkDiagram& d, const SkeinConfig& cfg = {}) {
  if (d.is_empty()) throw std::domain_error("V of the empty link is only defined through X");
  std::string key;
  if (cfg.cache) {
    key = d.encode();
    if (auto hit = cfg.cache->jones(key)) return *hit;
  }
  HalfLaurent v = jones_from_bracket(kauffman_bracket(d, cfg.bracket), d.writhe(), d.component_count());
  if (cfg.cache) cfg.cache->put_jones(key, v);
  return v;
}

/// X(L) as an exact quotient; X(empty) = 1.
inline RationalFn X_value(const LinkDiagram& d, const SkeinConfig& cfg = {}) {
  if (d.is_empty()) return RationalFn::constant(1);
  return {jones(d, cfg), d.component_count() - 1};
}

/// V of any link including the empty one, as a rational function.
inline RationalFn jones_fn(const LinkDiagram& d, const SkeinConfig& cfg = {}) {
  if (d.is_empty()) return {HalfLaurent(BigInt(1)), 1};
  return {jones(d, cfg), 0};
}

namespace detail {

/// First crossing met under-first when each component is walked from its
/// lowest edge, components in order; -1 if the diagram is descending.
inline int first_bad_crossing(const LinkDiagram& d) {
  std::vector<char> visited(d.crossing_count(), 0);
  for (int c = 0; c < d.component_count(); ++c)
    for (int e : d.component_edges(c)) {
      SlotRef h = d.head(e);
      if (visited[h.crossing]) continue;
      visited[h.crossing] = 1;
      if (h.slot == 0) return h.crossing;
    }
  return -1;
}

inline PolyZ conway_tree(const LinkDiagram& d, std::unordered_map<std::string, PolyZ>& memo) {
  const int bad = first_bad_crossing(d);
  if (bad < 0) return d.component_count() == 1 ? PolyZ::constant(1) : PolyZ();
  const std::string key = d.encode();
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const PolyZ other = conway_tree(switch_crossing(d, bad), memo);
  const PolyZ zero = PolyZ::z() * conway_tree(smooth_crossing(d, bad), memo);
  PolyZ out = d.crossing(bad).sign > 0 ? other - zero : other + zero;
  memo.emplace(key, out);
  return out;
}

}  // namespace detail

inline PolyZ conway(const LinkDiagram& d, const SkeinConfig& cfg = {}) {
  if (d.is_empty()) return {};
  if (d.crossing_count() > cfg.max_conway_crossings)
    throw ResourceLimitError("diagram has " + std::to_string(d.crossing_count()) +
                             " crossings, Conway limit is " + std::to_string(cfg.max_conway_crossings));
  std::string key;
  if (cfg.cache) {
    key = d.encode();
    if (auto hit = cfg.cache->conway(key)) return *hit;
  }
  std::unordered_map<std::string, PolyZ> memo;
  PolyZ out = detail::conway_tree(d, memo);
  if (cfg.cache) cfg.cache->put_conway(key, out);
  return out;
}

inline BigInt conway_coefficient(const LinkDiagram& d, int power, const SkeinConfig& cfg = {}) {
  if (!d.is_knot()) throw std::invalid_argument("Conway coefficient c_k needs a knot");
  return conway(d, cfg).coeff(power);
}

/// sum_j a_j j^i for V(K) = sum_j a_j t^j: the i-th derivative of V(K; e^h) at h = 0.
inline BigInt v_derivative(const LinkDiagram& d, int i, const SkeinConfig& cfg = {}) {
  if (!d.is_knot()) throw std::invalid_argument("v_i needs a knot");
  if (i < 0) throw std::invalid_argument("v_i needs i >= 0");
  BigInt total = 0;
  const HalfLaurent v = jones(d, cfg);
  for (const auto& [twice, c] : v.terms()) {
    if (twice % 2 != 0) throw InvariantViolation("knot Jones polynomial has a half-integer exponent");
    total += c * boost::multiprecision::pow(BigInt(twice / 2), static_cast<unsigned>(i));
  }
  return total;
}

struct PhiValue {
  RationalFn exact;
  TruncSeries series{0};
};

/// Phi(L) = sum over sublinks L' of (-1)^{#L-#L'} X(L'), Phi(empty) = 0.
inline RationalFn phi_exact(const LinkDiagram& d, const SkeinConfig& cfg = {}) {
  const int mu = d.component_count();
  if (mu == 0) return RationalFn::constant(0);
  if (mu > 20) throw ResourceLimitError("too many components for the sublink sum");
  RationalFn total = RationalFn::constant(0);
  for (unsigned mask = 0; mask < (1u << mu); ++mask) {
    std::vector<bool> keep(mu);
    int kept = 0;
    for (int c = 0; c < mu; ++c) {
      keep[c] = (mask >> c) & 1u;
      kept += keep[c] ? 1 : 0;
    }
    RationalFn x = X_value(sublink(d, keep), cfg);
    total = (mu - kept) % 2 == 0 ? total + x : total - x;
  }
  return total;
}

inline PhiValue phi(const LinkDiagram& d, int order, const SkeinConfig& cfg = {}) {
  PhiValue p{phi_exact(d, cfg), TruncSeries(order)};
  p.series = series_expand_rationalfn(p.exact, order);
  return p;
}

/// Phi of the cable L^i by the sublink structure of cables: a sublink of
/// L^i with j_xi strands of component xi is the cable L^j.
inline RationalFn phi_cable_exact(const LinkDiagram& base, const CableTuple& t,
                                  const SkeinConfig& cfg = {}) {
  const int mu = base.component_count();
  if (static_cast<int>(t.size()) != mu) throw std::invalid_argument("cable tuple has wrong length");
  RationalFn total = RationalFn::constant(0);
  if (tuple_size(t) == 0) return total;
  CableTuple j(mu, 0);
  while (true) {
    BigInt weight = 1;
    int dropped = 0;
    for (int c = 0; c < mu; ++c) {
      weight *= binomial(t[c], j[c]);
      dropped += t[c] - j[c];
    }
    RationalFn x = X_value(cable(base, j), cfg) * weight;
    total = dropped % 2 == 0 ? total + x : total - x;
    int c = mu - 1;
    while (c >= 0 && j[c] == t[c]) j[c--] = 0;
    if (c < 0) break;
    ++j[c];
  }
  return total;
}

inline PhiValue phi_cable(const LinkDiagram& base, const CableTuple& t, int order,
                          const SkeinConfig& cfg = {}) {
  PhiValue p{phi_cable_exact(base, t, cfg), TruncSeries(order)};
  p.series = series_expand_rationalfn(p.exact, order);
  return p;
}

/// Phi_i = i! [u^i] Phi.
inline Rational phi_i(const PhiValue& p, int i) {
  if (i < 0) throw std::invalid_argument("Phi_i needs i >= 0");
  if (i > p.series.order()) throw PrecisionError("Phi series order too small for Phi_" + std::to_string(i));
  return p.series[i] * Rational(factorial(i));
}

inline Rational phi_i(const LinkDiagram& d, int i, const SkeinConfig& cfg = {}) {
  return phi_i(phi(d, i, cfg), i);
}

/// phi_i(L) = (-2)^{#L} / (#L+i)! Phi_{#L+i}(L) = (-2)^{#L} [u^{#L+i}] Phi.
inline Rational phi_small(const PhiValue& p, int components, int i) {
  if (i < 1) throw std::invalid_argument("phi_i needs i >= 1");
  const int n = components + i;
  if (n > p.series.order()) throw PrecisionError("Phi series order too small for phi_" + std::to_string(i));
  Rational scale = 1;
  for (int k = 0; k < components; ++k) scale *= -2;
  return scale * p.series[n];
}

inline Rational phi_small(const LinkDiagram& d, int i, const SkeinConfig& cfg = {}) {
  return phi_small(phi(d, d.component_count() + i, cfg), d.component_count(), i);
}

/// Index of the first nonzero coefficient; nullopt when none is known
/// (Phi identically zero, or zero through the computed order).
inline std::optional<int> vanishing_order(const PhiValue& p) {
  if (p.exact.is_zero()) return std::nullopt;
  const int v = p.series.valuation();
  if (v > p.series.order()) return std::nullopt;
  return v;
}

}  // namespace ohtsuki
