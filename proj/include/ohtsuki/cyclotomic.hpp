#pragma once

/// Z/r^M [q] / (1 + q + ... + q^{r-1}) for an odd prime r, elements kept in
/// the basis q^0..q^{r-2}. Every element records the power of r to which
/// its coefficients are meaningful; division by the Gauss sum G_0 uses
/// G_0^2 = eps r and so costs one power.

#include "ohtsuki/errors.hpp"
#include "ohtsuki/rational.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ohtsuki {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct CycContext {
  int r = 0;
  int M = 0;
  std::int64_t modulus = 0;  // r^M
  int eps = 1;               // (-1)^{(r-1)/2}
  int bar2 = 0;              // (r+1)/2, also the exponent realizing q^{1/2}

  static std::shared_ptr<const CycContext> make(int r, int M) {
    if (r < 3 || !is_prime(r)) throw std::invalid_argument("cyclotomic ring needs an odd prime, got " + std::to_string(r));
    if (M < 1) throw std::invalid_argument("precision M must be positive");
    auto ctx = std::make_shared<CycContext>();
    ctx->r = r;
    ctx->M = M;
    __int128 mod = 1;
    for (int k = 0; k < M; ++k) {
      mod *= r;
      if (mod > (static_cast<__int128>(1) << 62))
        throw ResourceLimitError("r^M = " + std::to_string(r) + "^" + std::to_string(M) +
                                 " exceeds the 62-bit coefficient range");
    }
    ctx->modulus = static_cast<std::int64_t>(mod);
    ctx->eps = ((r - 1) / 2) % 2 == 0 ? 1 : -1;
    ctx->bar2 = (r + 1) / 2;
    return ctx;
  }

  std::int64_t r_power(int k) const {
    std::int64_t p = 1;
    for (int i = 0; i < k; ++i) p *= r;
    return p;
  }
};

using CycContextPtr = std::shared_ptr<const CycContext>;

class CycElem {
 public:
  CycElem(CycContextPtr ctx, std::int64_t constant = 0)  // NOLINT
      : ctx_(std::move(ctx)), c_(ctx_->r - 1, 0), prec_(ctx_->M) {
    c_[0] = mod_floor(constant, ctx_->modulus);
  }

  /// sum_j coeffs[j] q^j for any number of coefficients (folded with q^r = 1).
  static CycElem from_powers(CycContextPtr ctx, const std::vector<std::int64_t>& coeffs) {
    CycElem out(ctx);
    std::vector<std::int64_t> full(ctx->r, 0);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      auto& slot = full[j % ctx->r];
      slot = mod_floor(slot + mod_floor(coeffs[j], ctx->modulus), ctx->modulus);
    }
    out.absorb(full);
    return out;
  }

  /// q^e for any integer e.
  static CycElem q_power(CycContextPtr ctx, std::int64_t e) {
    std::vector<std::int64_t> full(ctx->r, 0);
    full[mod_floor(e, ctx->r)] = 1;
    CycElem out(ctx);
    out.absorb(full);
    return out;
  }

  const CycContext& context() const { return *ctx_; }
  const CycContextPtr& context_ptr() const { return ctx_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  int precision() const { return prec_; }

  bool is_zero() const {
    const std::int64_t m = ctx_->r_power(prec_);
    for (auto v : c_)
      if (v % m != 0) return false;
    return true;
  }

  friend CycElem operator+(CycElem a, const CycElem& b) {
    a.check_same(b);
    for (std::size_t j = 0; j < a.c_.size(); ++j) a.c_[j] = (a.c_[j] + b.c_[j]) % a.ctx_->modulus;
    a.prec_ = std::min(a.prec_, b.prec_);
    return a;
  }
  friend CycElem operator-(CycElem a, const CycElem& b) {
    a.check_same(b);
    const auto m = a.ctx_->modulus;
    for (std::size_t j = 0; j < a.c_.size(); ++j) a.c_[j] = mod_floor(a.c_[j] - b.c_[j], m);
    a.prec_ = std::min(a.prec_, b.prec_);
    return a;
  }
  friend CycElem operator-(CycElem a) {
    for (auto& v : a.c_) v = mod_floor(-v, a.ctx_->modulus);
    return a;
  }
  friend CycElem operator*(const CycElem& a, const CycElem& b) {
    a.check_same(b);
    const int r = a.ctx_->r;
    const auto m = a.ctx_->modulus;
    std::vector<__int128> acc(r, 0);
    for (int i = 0; i < r - 1; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < r - 1; ++j) {
        if (b.c_[j] == 0) continue;
        int k = i + j;
        if (k >= r) k -= r;
        acc[k] = (acc[k] + static_cast<__int128>(a.c_[i]) * b.c_[j]) % m;
      }
    }
    std::vector<std::int64_t> full(r);
    for (int k = 0; k < r; ++k) full[k] = static_cast<std::int64_t>(acc[k]);
    CycElem out(a.ctx_);
    out.absorb(full);
    out.prec_ = std::min(a.prec_, b.prec_);
    return out;
  }
  friend CycElem operator*(CycElem a, std::int64_t s) {
    s = mod_floor(s, a.ctx_->modulus);
    for (auto& v : a.c_) v = mul_mod(v, s, a.ctx_->modulus);
    return a;
  }
  friend CycElem operator*(std::int64_t s, CycElem a) { return std::move(a) * s; }

  CycElem pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power in the cyclotomic ring");
    CycElem result(ctx_, 1), base = *this;
    result.prec_ = prec_;
    while (n > 0) {
      if (n & 1) result = result * base;
      base = base * base;
      n >>= 1;
    }
    return result;
  }

  /// Equal modulo r^{min precision}.
  friend bool operator==(const CycElem& a, const CycElem& b) { return (a - b).is_zero(); }
  friend bool operator!=(const CycElem& a, const CycElem& b) { return !(a == b); }

  /// Coefficients divided by r (all must be divisible modulo r^prec);
  /// precision drops by one.
  CycElem divided_by_r() const {
    if (prec_ < 2) throw PrecisionError("division by r needs precision >= 2; raise M");
    const std::int64_t r = ctx_->r;
    const std::int64_t m = ctx_->r_power(prec_);
    CycElem out(ctx_);
    for (std::size_t j = 0; j < c_.size(); ++j) {
      const std::int64_t v = c_[j] % m;
      if (v % r != 0)
        throw PrecisionError("element not divisible by r at coefficient " + std::to_string(j));
      out.c_[j] = v / r;
    }
    out.prec_ = prec_ - 1;
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] == 0) continue;
      if (!s.empty()) s += " + ";
      s += std::to_string(c_[j]);
      if (j > 0) s += "*q^" + std::to_string(j);
    }
    return s.empty() ? "0" : s;
  }

 private:
  /// Takes coefficients of q^0..q^{r-1} and eliminates q^{r-1}.
  void absorb(const std::vector<std::int64_t>& full) {
    const int r = ctx_->r;
    const auto m = ctx_->modulus;
    const std::int64_t top = full[r - 1];
    for (int j = 0; j < r - 1; ++j) c_[j] = mod_floor(full[j] - top, m);
  }
  void check_same(const CycElem& o) const {
    if (ctx_ != o.ctx_ && (ctx_->r != o.ctx_->r || ctx_->M != o.ctx_->M))
      throw std::invalid_argument("cyclotomic elements from different rings");
  }

  CycContextPtr ctx_;
  std::vector<std::int64_t> c_;
  int prec_;
};

/// [k]_q = q^{-(k-1) bar2} (1 + q + ... + q^{k-1}); [0] = 0, [-k] = -[k].
inline CycElem quantum_integer(std::int64_t k, const CycContextPtr& ctx) {
  if (k == 0) return CycElem(ctx);
  if (k < 0) return -quantum_integer(-k, ctx);
  const int r = ctx->r;
  std::vector<std::int64_t> full(r, 0);
  const std::int64_t shift = mod_floor(-(k - 1) * static_cast<std::int64_t>(ctx->bar2), r);
  for (std::int64_t j = 0; j < k; ++j) {
    auto& slot = full[(j + shift) % r];
    slot = (slot + 1) % ctx->modulus;
  }
  return CycElem::from_powers(ctx, full);
}

/// q^{1/2} realized as q^{bar2}.
inline CycElem q_half_power(std::int64_t twice_exponent, const CycContextPtr& ctx) {
  return CycElem::q_power(ctx, twice_exponent * ctx->bar2);
}

/// (1+q)^{-1} = 2^{-1} sum_{j<r} (-1)^j q^j.
inline CycElem one_plus_q_inverse(const CycContextPtr& ctx) {
  std::vector<std::int64_t> full(ctx->r);
  for (int j = 0; j < ctx->r; ++j) full[j] = j % 2 == 0 ? 1 : -1;
  return CycElem::from_powers(ctx, full) * inv_mod(2, ctx->modulus);
}

/// [2]_q^{-1} = q^{bar2} (1+q)^{-1}.
inline CycElem quantum_two_inverse(const CycContextPtr& ctx) {
  return CycElem::q_power(ctx, ctx->bar2) * one_plus_q_inverse(ctx);
}

/// G_{2l}(q) = sum_{k=0}^{r-1} k^{2l} q^{k^2}.
inline CycElem gauss_sum(int l, const CycContextPtr& ctx) {
  if (l < 0) throw std::invalid_argument("Gauss sum needs l >= 0");
  const int r = ctx->r;
  std::vector<std::int64_t> full(r, 0);
  for (std::int64_t k = 0; k < r; ++k) {
    const std::int64_t w = pow_mod(k, 2 * l, ctx->modulus);
    auto& slot = full[(k * k) % r];
    slot = (slot + w) % ctx->modulus;
  }
  return CycElem::from_powers(ctx, full);
}

/// The unique y with y G_0 = x, as eps (x G_0) / r.
inline CycElem divide_by_gauss(const CycElem& x) {
  const auto& ctx = x.context_ptr();
  CycElem prod = x * gauss_sum(0, ctx);
  return prod.divided_by_r() * static_cast<std::int64_t>(ctx->eps);
}

/// G~_{2l} = (q-1)^l G_{2l} / G_0.
inline CycElem tilde_G(int l, const CycContextPtr& ctx) {
  CycElem q_minus_1 = CycElem::q_power(ctx, 1) - CycElem(ctx, 1);
  return divide_by_gauss(q_minus_1.pow(l) * gauss_sum(l, ctx));
}

/// Coefficients a_0..a_window (mod r) of x in powers of (q-1);
/// window defaults to (r-3)/2.
inline std::vector<std::int64_t> q_expansion(const CycElem& x, int window = -1) {
  const int r = x.context().r;
  if (window < 0) window = (r - 3) / 2;
  if (window > r - 2) throw std::invalid_argument("q-expansion window must be <= r-2");
  std::vector<std::int64_t> a(window + 1, 0);
  for (int n = 0; n <= window; ++n) {
    std::int64_t s = 0;
    for (int j = n; j < r - 1; ++j) {
      const std::int64_t b = mod_floor(binomial(j, n), r);
      s = (s + mul_mod(x.coeffs()[j] % r, b, r)) % r;
    }
    a[n] = s;
  }
  return a;
}

}  // namespace ohtsuki
