#pragma once

/// SO(3) quantum invariant tau_r of unit-framed surgery on an algebraically
/// split link, summed over the cables of the link:
///   tau_r = sum_{l <= (r-3)/2} sum_{L' in L^l \ L^{l-1}} Phi(L'; q)/(q-1)^{#L'} H_{i(L'), f}(q).

#include "ohtsuki/cyclotomic.hpp"
#include "ohtsuki/fermat.hpp"
#include "ohtsuki/h_function.hpp"
#include "ohtsuki/surgery.hpp"

#include <map>
#include <optional>

namespace ohtsuki {

/// Evaluates numerator/(s+s^-1)^k / (s^2-1)^{power} at s = q^{bar2}. The
/// division by (s^2-1)^power is exact over Z when Phi vanishes to that order.
inline CycElem rationalfn_over_q_minus_1(const RationalFn& x, int power, const CycContextPtr& ctx) {
  const HalfLaurent s2_minus_1 = HalfLaurent::monomial(2) - HalfLaurent::monomial(0);
  HalfLaurent num = x.numerator;
  for (int k = 0; k < power; ++k) {
    try {
      num = divide_exact(num, s2_minus_1);
    } catch (const std::exception&) {
      throw InvariantViolation("Phi is not divisible by (t-1)^" + std::to_string(power));
    }
  }
  std::vector<std::int64_t> full(ctx->r, 0);
  for (const auto& [e, c] : num.terms()) {
    auto& slot = full[mod_floor(static_cast<std::int64_t>(e) * ctx->bar2, ctx->r)];
    slot = mod_floor(slot + mod_floor(c, ctx->modulus), ctx->modulus);
  }
  CycElem out = CycElem::from_powers(ctx, full);
  if (x.denom_exponent > 0) out = out * quantum_two_inverse(ctx).pow(x.denom_exponent);
  return out;
}

struct TauConfig {
  int precision_m = 0;  // 0: #L * (r-3)/2 + 2
  SkeinConfig skein;
};

inline int default_precision(int components, int r) { return components * ((r - 3) / 2) + 2; }

inline CycElem tau_r(const FramedLink& fl, int r, const TauConfig& cfg = {}) {
  require_unit_framed_asl(fl);
  const int mu = fl.diagram.component_count();
  const int lmax = (r - 3) / 2;
  auto ctx = CycContext::make(r, cfg.precision_m > 0 ? cfg.precision_m : default_precision(mu, r));
  std::map<std::pair<int, int>, CycElem> h;
  auto H = [&](int i, int f) -> const CycElem& {
    auto key = std::make_pair(i, f);
    auto it = h.find(key);
    if (it == h.end()) it = h.emplace(key, H_q(i, f, ctx)).first;
    return it->second;
  };
  CycElem total(ctx, 1);
  for (int c = 0; c < mu; ++c) total = total * H(0, fl.framings[c]);
  if (mu == 0 || lmax < 1) return total;

  InvariantCache local;
  SkeinConfig skein = cfg.skein;
  if (!skein.cache) skein.cache = &local;
  for (const auto& t : enumerate_tuples(mu, lmax)) {
    const int size = tuple_size(t);
    if (size == 0) continue;
    const RationalFn phi = phi_cable_exact(fl.diagram, t, skein);
    if (phi.is_zero()) continue;
    CycElem term = rationalfn_over_q_minus_1(phi, size, ctx);
    for (int c = 0; c < mu; ++c) term = term * H(t[c], fl.framings[c]);
    total = total + term;
  }
  return total;
}

/// Compares a_{r,0..} of tau_r with 1, lambda1, lambda2[, lambda3], up to
/// the window (r-3)/2.
inline std::vector<CoefficientCheck> tau_lambda_check(const CycElem& tau, const LambdaVector& expected) {
  const int r = tau.context().r;
  const auto a = q_expansion(tau);
  std::vector<Rational> want{Rational(1), expected.lambda1, expected.lambda2};
  if (expected.lambda3) want.push_back(*expected.lambda3);
  std::vector<CoefficientCheck> out;
  for (int n = 0; n < static_cast<int>(want.size()) && n < static_cast<int>(a.size()); ++n)
    out.push_back(compare_residue(r, n, a[n], want[n]));
  return out;
}

}  // namespace ohtsuki
