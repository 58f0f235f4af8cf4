#pragma once

/// The building block H_{i,f} of the surgery formula for tau_r: the exact
/// cyclotomic value H_q and the closed forms H_t of its Fermat limit
/// (available for i <= 3, f = +-1).

#include "ohtsuki/cyclotomic.hpp"
#include "ohtsuki/fermat.hpp"
#include "ohtsuki/series.hpp"

namespace ohtsuki {

/// H_{i,f}(q) = (-f) (f/r) q^{3 4bar f - 2bar} (q-1)^{i+1} / G_0
///   * sum_{k=1}^{(r-1)/2} q^{4bar f (k^2-1)} [k] sum_j (-1)^j C(k-j-1,j) C(k-2j-1,i) [2]^{k-2j-1}
inline CycElem H_q(int i, std::int64_t f, const CycContextPtr& ctx) {
  if (i < 0) throw std::invalid_argument("H_q needs i >= 0");
  const int r = ctx->r;
  if (mod_floor(f, r) == 0) throw std::domain_error("H_q needs f coprime to r");
  const std::int64_t bar4 = bar(4, r);
  const std::int64_t m = ctx->modulus;
  const CycElem two = quantum_integer(2, ctx);
  std::vector<CycElem> two_pow{CycElem(ctx, 1)};
  for (int k = 1; k < r; ++k) two_pow.push_back(two_pow.back() * two);

  CycElem sum(ctx);
  for (std::int64_t k = 1; k <= (r - 1) / 2; ++k) {
    CycElem inner(ctx);
    for (std::int64_t j = 0; 2 * j <= k - 1; ++j) {
      const BigInt coeff = binomial(k - j - 1, j) * binomial(k - 2 * j - 1, i);
      if (coeff == 0) continue;
      const std::int64_t c = mod_floor(j % 2 == 0 ? coeff : BigInt(-coeff), m);
      inner = inner + two_pow[k - 2 * j - 1] * c;
    }
    const std::int64_t e = mod_floor(mul_mod(mod_floor(bar4 * f, r), (k * k - 1) % r, r), r);
    sum = sum + CycElem::q_power(ctx, e) * quantum_integer(k, ctx) * inner;
  }
  const std::int64_t prefactor_exp = mod_floor(3 * mod_floor(bar4 * f, r) - ctx->bar2, r);
  const CycElem q_minus_1 = CycElem::q_power(ctx, 1) - CycElem(ctx, 1);
  CycElem x = CycElem::q_power(ctx, prefactor_exp) * q_minus_1.pow(i + 1) * sum *
              mod_floor(-f * legendre(f, r), m);
  return divide_by_gauss(x);
}

/// Closed form of f-lim H_{i,f} as a series in u = t - 1.
inline TruncSeries H_t(int i, int f, int order) {
  if (f != 1 && f != -1) throw std::invalid_argument("H_t closed forms need f = +-1");
  if (order < 0) throw std::invalid_argument("H_t needs order >= 0");
  const TruncSeries one = TruncSeries::constant(1, order);
  const TruncSeries t_plus_1 = TruncSeries::constant(2, order) + TruncSeries::variable(order);
  switch (i) {
    case 0:
      return one;
    case 1:
      return t_plus_1 * Rational(-f);
    case 2: {
      // 1 + f + 4 sum_{m>=1} g_{1,m} u^{m-1}
      const auto g = g_coefficients(1, order + 1);
      TruncSeries bracket = TruncSeries::constant(1 + f, order);
      for (int m = 1; m <= order + 1; ++m) bracket[m - 1] += 4 * g[m];
      return series_pow(t_plus_1, 2) * bracket * Rational(f, 2);
    }
    case 3: {
      // t^{(1+f)/2} [1 + 24 sum_{m>=0} g_{1,m+3} u^{m+1}]
      const auto g = g_coefficients(1, order + 2);
      TruncSeries bracket = one;
      for (int m = 0; m + 1 <= order; ++m) bracket[m + 1] += 24 * g[m + 3];
      TruncSeries t_power = f == 1 ? TruncSeries::constant(1, order) + TruncSeries::variable(order) : one;
      return series_pow(t_plus_1, 3) * t_power * bracket * Rational(-f, 6);
    }
    default:
      throw std::invalid_argument("no closed form for H_t with i > 3");
  }
}

/// Largest n at which a_{r,n}(H_{i,f}) agrees with the limit at every
/// prime r: (r-3)/2 - i. In tau_r, H_{i,f} multiplies a term of order
/// (q-1)^i, so the product is still exact through (r-3)/2.
inline int h_window(int i, int r) { return (r - 3) / 2 - i; }

/// (q-1)-expansion of H_q(i, f) against the residues of H_t(i, f), up to
/// min(order, h_window) (or the plain window (r-3)/2 when full_window).
inline std::vector<CoefficientCheck> h_limit_check(int i, int f, const std::vector<int>& primes,
                                                   int order, int precision_m = 2,
                                                   bool full_window = false) {
  std::vector<CoefficientCheck> out;
  const TruncSeries closed = H_t(i, f, order);
  for (int r : primes) {
    auto ctx = CycContext::make(r, precision_m);
    const int window = std::min(order, full_window ? (r - 3) / 2 : h_window(i, r));
    if (window < 0) continue;
    const auto a = q_expansion(H_q(i, f, ctx), window);
    for (int n = 0; n <= window; ++n) out.push_back(compare_residue(r, n, a[n], closed[n]));
  }
  return out;
}

}  // namespace ohtsuki
