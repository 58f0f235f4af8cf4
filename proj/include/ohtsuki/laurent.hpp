#pragma once

#include "ohtsuki/rational.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace ohtsuki {

/// Sparse Laurent polynomial in one variable with exact coefficients.
/// Zero coefficients are never stored, so structural equality is ring
/// equality.
template <class C>
class Laurent {
 public:
  using Terms = std::map<int, C>;

  Laurent() = default;
  Laurent(const C& constant) { add_term(0, constant); }  // NOLINT(implicit)

  static Laurent monomial(int exponent, const C& coeff = C(1)) {
    Laurent p;
    p.add_term(exponent, coeff);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  C coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(int exponent, const C& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Laurent shifted(int by) const {
    Laurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + by, c);
    return out;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Laurent& operator*=(const C& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(Laurent a) { return a *= C(-1); }
  friend Laurent operator*(Laurent a, const C& s) { return a *= s; }
  friend Laurent operator*(const C& s, Laurent a) { return a *= s; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent pow(int n) const {
    if (n < 0) throw std::domain_error("negative power of a Laurent polynomial");
    Laurent result(C(1)), base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return result;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  /// Exact quotient by a divisor whose lowest coefficient is +-1 (the only
  /// case needed here, e.g. powers of s^2 - 1). Throws if a remainder is left.
  friend Laurent divide_exact(const Laurent& numerator, const Laurent& divisor) {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    const int dlo = divisor.min_exponent();
    const C lead = divisor.terms_.begin()->second;
    Laurent rem = numerator, quot;
    while (!rem.is_zero()) {
      if (rem.max_exponent() - rem.min_exponent() < divisor.max_exponent() - dlo)
        throw std::domain_error("polynomial division leaves a remainder");
      const int e = rem.min_exponent();
      C c = rem.terms_.begin()->second;
      if (c % lead != 0) throw std::domain_error("polynomial division leaves a remainder");
      c /= lead;
      quot.add_term(e - dlo, c);
      for (const auto& [de, dc] : divisor.terms_) rem.add_term(de - dlo + e, -(c * dc));
    }
    return quot;
  }

 private:
  Terms terms_;
};

/// Polynomial in s = t^{1/2} over the integers: exponent k stands for t^{k/2}.
using HalfLaurent = Laurent<BigInt>;

/// (t^{1/2} + t^{-1/2}) as a HalfLaurent.
inline HalfLaurent quantum_two() {
  return HalfLaurent::monomial(1) + HalfLaurent::monomial(-1);
}

/// Writes a HalfLaurent in ascending powers of t, e.g. "t + t^3 - t^4" or
/// "t^(-1/2) + t^(1/2)".
inline std::string format_half_laurent(const HalfLaurent& p, const std::string& var = "t") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [twice, c] : p.terms()) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string power;
    if (twice % 2 == 0) {
      int e = twice / 2;
      if (e == 1)
        power = var;
      else if (e != 0)
        power = var + "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    } else {
      power = var + "^(" + std::to_string(twice) + "/2)";
    }
    if (power.empty())
      os << mag;
    else if (mag == 1)
      os << power;
    else
      os << mag << "*" << power;
  }
  return os.str();
}

}  // namespace ohtsuki
