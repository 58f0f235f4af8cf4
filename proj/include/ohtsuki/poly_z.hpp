#pragma once

#include "ohtsuki/rational.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace ohtsuki {

/// Integer polynomial in z, dense, trailing zeros trimmed (zero has no
/// coefficients).
class PolyZ {
 public:
  PolyZ() = default;
  explicit PolyZ(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  static PolyZ constant(const BigInt& v) { return PolyZ({v}); }
  static PolyZ z() { return PolyZ({0, 1}); }

  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : BigInt(0);
  }

  friend PolyZ operator+(const PolyZ& a, const PolyZ& b) {
    std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(int(k)) + b.coeff(int(k));
    return PolyZ(std::move(out));
  }
  friend PolyZ operator-(const PolyZ& a) {
    std::vector<BigInt> out = a.c_;
    for (auto& v : out) v = -v;
    return PolyZ(std::move(out));
  }
  friend PolyZ operator-(const PolyZ& a, const PolyZ& b) { return a + (-b); }
  friend PolyZ operator*(const PolyZ& a, const PolyZ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return PolyZ(std::move(out));
  }
  friend bool operator==(const PolyZ& a, const PolyZ& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PolyZ& a, const PolyZ& b) { return !(a == b); }

  std::string to_string(const std::string& var = "z") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      const BigInt& v = c_[k];
      if (v == 0) continue;
      BigInt mag = v < 0 ? BigInt(-v) : v;
      if (first)
        os << (v < 0 ? "-" : "");
      else
        os << (v < 0 ? " - " : " + ");
      first = false;
      if (k == 0)
        os << mag;
      else {
        if (mag != 1) os << mag << "*";
        os << var;
        if (k > 1) os << "^" << k;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

}  // namespace ohtsuki
