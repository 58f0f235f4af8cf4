#pragma once

/// Ohtsuki invariants lambda_1..3 of surgeries: 1/n surgery on a knot from
/// V and the Conway polynomial, unit-framed surgery on an algebraically
/// split link from Phi of its cables, and composition under connected sum.

#include "ohtsuki/diagram_ops.hpp"
#include "ohtsuki/errors.hpp"
#include "ohtsuki/h_function.hpp"
#include "ohtsuki/rational.hpp"
#include "ohtsuki/series.hpp"
#include "ohtsuki/skein.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ohtsuki {

struct LambdaVector {
  Rational lambda1 = 0;
  Rational lambda2 = 0;
  std::optional<Rational> lambda3;
  std::string source;  // which formulas produced the values

  /// Throws InvariantViolation unless lambda1 in 6Z, lambda2 in 3Z and
  /// lambda1 = 2 lambda2 mod 24.
  const LambdaVector& validate() const;
};

struct CongruenceReport {
  bool lambda1_integral_6 = false;  // lambda1 in 6Z
  bool lambda2_integral_3 = false;  // lambda2 in 3Z
  bool mod24 = false;               // lambda1 = 2 lambda2 mod 24
  bool casson_form = false;         // lambda1/6 = lambda2/3 mod 4
  std::int64_t difference_mod24 = -1;  // (2 lambda2 - lambda1) mod 24, -1 if not integral
  bool pass() const { return lambda1_integral_6 && lambda2_integral_3 && mod24 && casson_form; }
};

inline CongruenceReport congruence_report(const Rational& lambda1, const Rational& lambda2) {
  CongruenceReport r;
  const bool integral = is_integer(lambda1) && is_integer(lambda2);
  if (!integral) return r;
  const BigInt l1 = num(lambda1), l2 = num(lambda2);
  r.lambda1_integral_6 = l1 % 6 == 0;
  r.lambda2_integral_3 = l2 % 3 == 0;
  r.difference_mod24 = mod_floor(BigInt(2 * l2 - l1), 24);
  r.mod24 = r.difference_mod24 == 0;
  if (r.lambda1_integral_6 && r.lambda2_integral_3)
    r.casson_form = mod_floor(BigInt(l1 / 6 - l2 / 3), 4) == 0;
  return r;
}

inline CongruenceReport congruence_report(const LambdaVector& v) {
  return congruence_report(v.lambda1, v.lambda2);
}

inline const LambdaVector& LambdaVector::validate() const {
  const auto rep = congruence_report(*this);
  if (!rep.pass())
    throw InvariantViolation("lambda vector (" + to_string(lambda1) + ", " + to_string(lambda2) +
                             ") from " + source + " violates integrality or lambda1 = 2 lambda2 mod 24");
  return *this;
}

inline Rational casson_from_lambda1(const Rational& lambda1) {
  if (!is_integer(lambda1) || num(lambda1) % 6 != 0)
    throw InvariantViolation("lambda1 = " + to_string(lambda1) + " is not a multiple of 6");
  return lambda1 / 6;
}

inline Rational lambda1_knot(const LinkDiagram& k, std::int64_t n, const SkeinConfig& cfg = {}) {
  return Rational(-n) * Rational(v_derivative(k, 2, cfg));
}

inline Rational lambda2_knot(const LinkDiagram& k, std::int64_t n, const SkeinConfig& cfg = {}) {
  const Rational v2(v_derivative(k, 2, cfg)), v3(v_derivative(k, 3, cfg));
  const Rational c4(conway_coefficient(k, 4, cfg));
  const Rational nn(n);
  return nn / 2 * v2 - nn / 3 * v3 + nn * nn * (v2 + Rational(5, 3) * v2 * v2 - 60 * c4);
}

/// (lambda1, lambda2) of 1/n surgery on a knot, validated.
inline LambdaVector lambda_knot(const LinkDiagram& k, std::int64_t n, const SkeinConfig& cfg = {}) {
  if (!k.is_knot()) throw std::invalid_argument("1/n surgery needs a knot");
  LambdaVector v{lambda1_knot(k, n, cfg), lambda2_knot(k, n, cfg), std::nullopt, "knot surgery formulas"};
  v.validate();
  return v;
}

inline void require_unit_framed_asl(const FramedLink& fl) {
  if (!fl.is_unit_framed()) throw std::invalid_argument("surgery link must be framed by +-1");
  if (!is_asl(fl.diagram)) throw std::invalid_argument("surgery link must be algebraically split");
}

/// Phi of every cable tuple with entries 0..max_order, expanded far enough
/// for phi_1..phi_max_order. Keyed by tuple.
inline std::map<CableTuple, PhiValue> cable_phis(const FramedLink& fl, int max_order, const SkeinConfig& cfg) {
  std::map<CableTuple, PhiValue> out;
  const int mu = fl.diagram.component_count();
  if (mu == 0) return out;
  for (const auto& t : enumerate_tuples(mu, max_order)) {
    const int size = tuple_size(t);
    if (size == 0) continue;
    out.emplace(t, phi_cable(fl.diagram, t, size + max_order, cfg));
  }
  return out;
}

/// lambda_1..lambda_max_order of unit-framed surgery on an ASL:
///   lambda1 = sum_{L' in L}   f phi1
///   lambda2 = sum_{L' in L}   f phi1 #L'/2 + sum_{L' in L^2} f phi2 / 2^{s2}
///   lambda3 = sum_{L' in L}   f phi1 #L'(#L'-1)/8
///           + sum_{L' in L^2} f phi2 (s1 + 2 s2 + (1/3) sum_{i=2} f) / 2^{s2+1}
///           + sum_{L' in L^3} f phi3 / (2^{s2+s3} 3^{s3})
/// with f the inherited framing product of L'.
inline LambdaVector lambda_asl(const FramedLink& fl, int max_order, const SkeinConfig& cfg = {}) {
  if (max_order < 1 || max_order > 3) throw std::invalid_argument("lambda_asl supports orders 1..3");
  require_unit_framed_asl(fl);
  const int mu = fl.diagram.component_count();
  LambdaVector v{0, 0, std::nullopt, "unit-framed link surgery formulas"};
  if (mu == 0) {
    if (max_order >= 3) v.lambda3 = Rational(0);
    return v;
  }
  const auto phis = cable_phis(fl, max_order, cfg);
  Rational l3 = 0;
  for (const auto& [t, p] : phis) {
    const int size = tuple_size(t), top = tuple_max(t);
    const TupleStats s = tuple_stats(t, fl.framings);
    const Rational f(s.framing_product);
    if (top == 1) {
      const Rational phi1 = phi_small(p, size, 1);
      v.lambda1 += f * phi1;
      if (max_order >= 2) v.lambda2 += f * phi1 * Rational(size, 2);
      if (max_order >= 3) l3 += f * phi1 * Rational(size * (size - 1), 8);
    }
    if (top <= 2 && max_order >= 2) {
      const Rational phi2 = phi_small(p, size, 2);
      v.lambda2 += f * phi2 / Rational(BigInt(1) << s.s2);
      if (max_order >= 3) {
        const Rational weight = (Rational(s.s1 + 2 * s.s2) + Rational(s.twos_framing_sum, 3)) /
                                Rational(BigInt(1) << (s.s2 + 1));
        l3 += f * phi2 * weight;
      }
    }
    if (top <= 3 && max_order >= 3) {
      const Rational phi3 = phi_small(p, size, 3);
      l3 += f * phi3 / (Rational(BigInt(1) << (s.s2 + s.s3)) * Rational(boost::multiprecision::pow(BigInt(3), s.s3)));
    }
  }
  if (max_order >= 3) v.lambda3 = l3;
  if (max_order >= 2) v.validate();
  return v;
}

/// Coefficients 1, lambda1, .., lambda_order of
///   sum over cable tuples i of Phi(L^i)/(t-1)^{|i|} prod H_{i_xi, f_xi}(t),
/// computed directly in Q[[t-1]] (order <= 3, the closed forms of H).
inline TruncSeries fermat_limit_series(const FramedLink& fl, int order, const SkeinConfig& cfg = {}) {
  if (order < 0 || order > 3) throw std::invalid_argument("Fermat limit series supports orders 0..3");
  require_unit_framed_asl(fl);
  TruncSeries total = TruncSeries::constant(1, order);
  const int mu = fl.diagram.component_count();
  if (mu == 0 || order == 0) return total;
  std::map<std::pair<int, int>, TruncSeries> h;
  for (int i = 0; i <= order; ++i)
    for (int f : {1, -1}) h.emplace(std::make_pair(i, f), H_t(i, f, order));
  for (const auto& t : enumerate_tuples(mu, order)) {
    const int size = tuple_size(t);
    if (size == 0) continue;
    TruncSeries term = phi_cable(fl.diagram, t, size + order, cfg).series.divided_by_u_power(size).truncated(order);
    for (int c = 0; c < mu; ++c) term = term * h.at({t[c], fl.framings[c]});
    total = total + term;
  }
  return total;
}

/// lambda(M1 # M2): lambda1 adds, lambda2 = lambda2(M1) + lambda2(M2) + lambda1(M1) lambda1(M2).
inline LambdaVector lambda_connected_sum(const std::vector<LambdaVector>& parts) {
  LambdaVector out{0, 0, std::nullopt, "connected sum"};
  for (const auto& p : parts) {
    out.lambda2 = out.lambda2 + p.lambda2 + out.lambda1 * p.lambda1;
    out.lambda1 += p.lambda1;
  }
  return out;
}

}  // namespace ohtsuki
