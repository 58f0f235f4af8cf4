#pragma once

/// Fermat functions: maps from primes to residues that agree with a fixed
/// rational m/n (as m * n^-1 mod r) at every large prime r.

#include "ohtsuki/cyclotomic.hpp"
#include "ohtsuki/rational.hpp"
#include "ohtsuki/series.hpp"

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

namespace ohtsuki {

inline int legendre(std::int64_t a, std::int64_t r) {
  const std::int64_t v = pow_mod(mod_floor(a, r), (r - 1) / 2, r);
  if (v == 0) return 0;
  return v == 1 ? 1 : -1;
}

/// m-bar: the inverse of m modulo r in 1..r-1.
inline std::int64_t bar(std::int64_t m, std::int64_t r) {
  if (mod_floor(m, r) == 0) throw std::domain_error("bar(m) needs m coprime to r");
  return inv_mod(mod_floor(m, r), r);
}

inline std::vector<int> primes_between(int lo, int hi) {
  std::vector<int> out;
  for (int p = std::max(lo, 3); p <= hi; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

struct FermatSample {
  int prime = 0;
  std::int64_t residue = 0;
};

/// One compared value: computed residue versus the residue of an exact
/// rational, at a prime and coefficient index.
struct CoefficientCheck {
  int prime = 0;
  int n = 0;
  std::int64_t computed = 0;
  std::int64_t expected = 0;
  bool pass = false;
  bool skipped = false;  // expected value's denominator divisible by the prime
};

inline bool all_pass(const std::vector<CoefficientCheck>& checks) {
  for (const auto& c : checks)
    if (!c.skipped && !c.pass) return false;
  return true;
}

inline CoefficientCheck compare_residue(int prime, int n, std::int64_t computed, const Rational& expected) {
  CoefficientCheck c{prime, n, mod_floor(computed, prime), 0, false, false};
  if (mod_floor(den(expected), prime) == 0) {
    c.skipped = true;
    return c;
  }
  c.expected = residue_mod(expected, prime);
  c.pass = c.computed == c.expected;
  return c;
}

/// True iff every sample matches the candidate; samples at primes dividing
/// the candidate's denominator are skipped and reported through `skipped`.
inline bool residue_check(const std::vector<FermatSample>& samples, const Rational& candidate,
                          std::vector<int>* skipped = nullptr) {
  bool ok = true;
  for (const auto& s : samples) {
    auto c = compare_residue(s.prime, 0, s.residue, candidate);
    if (c.skipped) {
      if (skipped) skipped->push_back(s.prime);
      continue;
    }
    ok = ok && c.pass;
  }
  return ok;
}

inline std::vector<FermatSample> sample_function(const std::vector<int>& primes,
                                                 const std::function<std::int64_t(int)>& f) {
  std::vector<FermatSample> out;
  for (int r : primes) out.push_back({r, mod_floor(f(r), r)});
  return out;
}

/// D_k(r) = ((r-1)/2)! / ((r-1)/2 - k)! mod r.
inline std::int64_t fixture_D(int k, int r) {
  const std::int64_t h = (r - 1) / 2;
  if (h - k < 0) throw std::domain_error("D_k(r) needs (r-1)/2 - k >= 0");
  std::int64_t v = 1;
  if (k >= 0) {
    for (std::int64_t j = h - k + 1; j <= h; ++j) v = mul_mod(v, j, r);
    return v;
  }
  for (std::int64_t j = h + 1; j <= h - k; ++j) v = mul_mod(v, j, r);
  return inv_mod(v, r);
}

/// Printed residue of D_k.
inline Rational fixture_D_residue(int k) {
  Rational v = 1;
  const Rational half(1, 2);
  if (k > 0)
    for (int j = 0; j < k; ++j) v *= -half - j;
  else
    for (int j = 1; j <= -k; ++j) v /= -half + j;
  return v;
}

inline std::int64_t factorial_mod(std::int64_t n, std::int64_t r) {
  std::int64_t v = 1;
  for (std::int64_t j = 2; j <= n; ++j) v = mul_mod(v, j, r);
  return v;
}

struct FixtureResult {
  std::string name;
  Rational residue;
  std::vector<int> primes;
  bool pass = false;
};

/// The four standard Fermat functions with their residues, over primes
/// 5 <= r <= max_prime; D_k is checked for |k| <= 3 at r > 2|k|, where
/// D_{-k} is defined.
inline std::vector<FixtureResult> fermat_fixtures(int max_prime) {
  const auto primes = primes_between(5, max_prime);
  std::vector<FixtureResult> out;
  auto add = [&](std::string name, Rational res, const std::function<std::int64_t(int)>& f, int lo = 5) {
    std::vector<int> ps;
    for (int r : primes)
      if (r >= lo) ps.push_back(r);
    auto samples = sample_function(ps, f);
    out.push_back({std::move(name), res, ps, residue_check(samples, res)});
  };
  add("(r-1)/2", Rational(-1, 2), [](int r) { return (r - 1) / 2; });
  add("(r-1)!", Rational(-1), [](int r) { return factorial_mod(r - 1, r); });
  add("2^(r-1)", Rational(1), [](int r) { return pow_mod(2, r - 1, r); });
  add("(3/5)^(r-1)", Rational(1), [](int r) { return pow_mod(mul_mod(3, bar(5, r), r), r - 1, r); }, 7);
  for (int k = -3; k <= 3; ++k)
    add("D_" + std::to_string(k), fixture_D_residue(k), [k](int r) { return fixture_D(k, r); }, 2 * std::abs(k) + 1);
  return out;
}

/// Compares the (q-1)-expansion of G~_{2l} with g_{l,n} at each prime,
/// n = 0..min(order, (r-3)/2).
inline std::vector<CoefficientCheck> gauss_limit_check(int l, const std::vector<int>& primes, int order,
                                                     int precision_m = 2) {
  const auto g = g_coefficients(l, std::max(order, 0));
  std::vector<CoefficientCheck> out;
  for (int r : primes) {
    auto ctx = CycContext::make(r, precision_m);
    const int window = std::min(order, (r - 3) / 2);
    if (window < 0) continue;
    const auto a = q_expansion(tilde_G(l, ctx), window);
    for (int n = 0; n <= window; ++n) out.push_back(compare_residue(r, n, a[n], g[n]));
  }
  return out;
}

}  // namespace ohtsuki
