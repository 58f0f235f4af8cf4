#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ohtsuki {

using BigInt = boost::multiprecision::cpp_int;
/// Always normalized: lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(num, den);
}

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

/// Parses "a" or "a/b".
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

inline BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative number");
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// C(n, k) for integer n (negative n allowed, upper-index negation rule);
/// zero when k < 0.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  BigInt b = 1;
  for (std::int64_t j = 0; j < k; ++j) {
    b *= (n - j);
    b /= (j + 1);
  }
  return b;
}

/// Non-negative representative of a mod m.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t mod_floor(const BigInt& a, std::int64_t m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

inline std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t result = 1 % m;
  base = mod_floor(base, m);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// Inverse of a modulo m via extended Euclid; throws if not a unit.
inline std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod_floor(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("element is not invertible modulo " + std::to_string(m));
  return mod_floor(old_s, m);
}

/// Image of a rational in Z/m; the denominator must be a unit mod m.
inline std::int64_t residue_mod(const Rational& q, std::int64_t m) {
  std::int64_t n = mod_floor(num(q), m);
  std::int64_t d = mod_floor(den(q), m);
  return mul_mod(n, inv_mod(d, m), m);
}

}  // namespace ohtsuki
