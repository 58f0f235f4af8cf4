#pragma once

/// Truncated power series in u = t - 1 over the rationals, and the
/// expansions at t = 1 of the polynomial/rational objects the skein
/// invariants produce.

#include "ohtsuki/laurent.hpp"
#include "ohtsuki/rational.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ohtsuki {

/// sum_{n<=order} c_n u^n. Coefficients beyond `order` are unknown, so
/// binary operations keep the smaller order.
class TruncSeries {
 public:
  explicit TruncSeries(int order) : c_(check_order(order) + 1) {}
  TruncSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {  // NOLINT
    if (c_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  }
  static TruncSeries constant(const Rational& v, int order) {
    TruncSeries s(order);
    s.c_[0] = v;
    return s;
  }
  /// u itself; requires order >= 1 to be visible.
  static TruncSeries variable(int order) {
    TruncSeries s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](int n) const { return c_.at(n); }
  Rational& operator[](int n) { return c_.at(n); }

  TruncSeries truncated(int order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    return TruncSeries(std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
  }

  /// Index of the first nonzero coefficient, or order()+1 if none is known.
  int valuation() const {
    for (int n = 0; n <= order(); ++n)
      if (c_[n] != 0) return n;
    return order() + 1;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out(std::min(a.order(), b.order()));
    for (int n = 0; n <= out.order(); ++n) out.c_[n] = a.c_[n] + b.c_[n];
    return out;
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out(std::min(a.order(), b.order()));
    for (int n = 0; n <= out.order(); ++n) out.c_[n] = a.c_[n] - b.c_[n];
    return out;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out(std::min(a.order(), b.order()));
    const int N = out.order();
    for (int i = 0; i <= N; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; i + j <= N; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return out;
  }
  friend TruncSeries operator*(TruncSeries a, const Rational& s) {
    for (auto& v : a.c_) v *= s;
    return a;
  }
  friend TruncSeries operator*(const Rational& s, TruncSeries a) { return std::move(a) * s; }
  TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

  /// Divides by u^k; the first k coefficients must vanish. Loses k orders.
  TruncSeries divided_by_u_power(int k) const {
    if (k > order()) throw std::invalid_argument("not enough known terms to divide by u^k");
    for (int n = 0; n < k; ++n)
      if (c_[n] != 0) throw std::domain_error("series is not divisible by the requested power of u");
    return TruncSeries(std::vector<Rational>(c_.begin() + k, c_.end()));
  }

  std::string to_string(const std::string& var = "u") const {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= order(); ++n) {
      if (c_[n] == 0) continue;
      os << (first ? "" : " + ") << "(" << ohtsuki::to_string(c_[n]) << ")";
      if (n >= 1) os << "*" << var;
      if (n >= 2) os << "^" << n;
      first = false;
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << order() + 1 << ")";
    return os.str();
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    return order;
  }
  std::vector<Rational> c_;
};

inline TruncSeries series_inverse(const TruncSeries& s) {
  if (s[0] == 0) throw std::domain_error("series with zero constant term is not invertible");
  const int N = s.order();
  TruncSeries out(N);
  const Rational inv0 = 1 / s[0];
  out[0] = inv0;
  for (int n = 1; n <= N; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += s[k] * out[n - k];
    out[n] = -acc * inv0;
  }
  return out;
}

/// Integer power; negative exponents go through series_inverse.
inline TruncSeries series_pow(const TruncSeries& s, int n) {
  if (n < 0) return series_pow(series_inverse(s), -n);
  TruncSeries result = TruncSeries::constant(1, s.order()), base = s;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

/// (1+u)^x for rational x, generalized binomial series.
inline TruncSeries binomial_series(const Rational& x, int order) {
  TruncSeries out(order);
  Rational c = 1;
  for (int n = 0; n <= order; ++n) {
    out[n] = c;
    c = c * (x - n) / (n + 1);
  }
  return out;
}

/// Taylor expansion at t = 1 of p(t^{1/2}) with t = 1 + u.
inline TruncSeries series_from_half_laurent(const HalfLaurent& p, int order) {
  TruncSeries out(order);
  for (const auto& [twice, c] : p.terms()) {
    TruncSeries term = binomial_series(Rational(twice, 2), order);
    out += term * Rational(c);
  }
  return out;
}

/// numerator / (t^{1/2} + t^{-1/2})^denom_exponent, kept exact. The
/// denominator is 2^k at t = 1, so expansions there always exist.
struct RationalFn {
  HalfLaurent numerator;
  int denom_exponent = 0;

  static RationalFn constant(const BigInt& v) { return {HalfLaurent(v), 0}; }

  bool is_zero() const { return numerator.is_zero(); }

  /// Same function rewritten over a larger denominator power.
  RationalFn raised_to(int k) const {
    if (k < denom_exponent) throw std::invalid_argument("cannot lower denominator exponent");
    return {numerator * quantum_two().pow(k - denom_exponent), k};
  }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    const int k = std::max(a.denom_exponent, b.denom_exponent);
    return {a.raised_to(k).numerator + b.raised_to(k).numerator, k};
  }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    const int k = std::max(a.denom_exponent, b.denom_exponent);
    return {a.raised_to(k).numerator - b.raised_to(k).numerator, k};
  }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return {a.numerator * b.numerator, a.denom_exponent + b.denom_exponent};
  }
  friend RationalFn operator*(RationalFn a, const BigInt& s) {
    a.numerator *= s;
    return a;
  }
  /// Equality as functions (cross-multiplied).
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    const int k = std::max(a.denom_exponent, b.denom_exponent);
    return a.raised_to(k).numerator == b.raised_to(k).numerator;
  }
};

inline TruncSeries series_expand_rationalfn(const RationalFn& x, int order) {
  TruncSeries num = series_from_half_laurent(x.numerator, order);
  if (x.denom_exponent == 0) return num;
  TruncSeries two = series_from_half_laurent(quantum_two(), order);
  return num * series_pow(two, -x.denom_exponent);
}

/// log t = log(1+u) = u - u^2/2 + u^3/3 - ...
inline TruncSeries log_t_series(int order) {
  if (order < 1) throw std::invalid_argument("log series needs order >= 1");
  TruncSeries out(order);
  for (int n = 1; n <= order; ++n) out[n] = Rational((n % 2 == 1) ? 1 : -1, n);
  return out;
}

/// A_l = (-1/2)^l (2l-1)!!, A_0 = 1.
inline Rational A_const(int l) {
  if (l < 0) throw std::domain_error("A_l needs l >= 0");
  Rational a = 1;
  for (int k = 1; k <= l; ++k) a *= Rational(-(2 * k - 1), 2);
  return a;
}

/// (t-1)/log t = u / log(1+u) as a series to the given order.
inline TruncSeries u_over_log_series(int order) {
  // log(1+u)/u = sum (-1)^n u^n/(n+1)
  TruncSeries s(order);
  for (int n = 0; n <= order; ++n) s[n] = Rational((n % 2 == 0) ? 1 : -1, n + 1);
  return series_inverse(s);
}

/// g_{l,0..order}: coefficients of A_l * ((t-1)/log t)^l in powers of t-1.
inline std::vector<Rational> g_coefficients(int l, int order) {
  if (l < 0 || order < 0) throw std::invalid_argument("g coefficients need l, order >= 0");
  TruncSeries s = series_pow(u_over_log_series(order), l) * A_const(l);
  return s.coeffs();
}

}  // namespace ohtsuki
