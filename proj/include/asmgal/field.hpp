#pragma once

// Finite fields F_{p^e} with table-driven arithmetic.
//
// An element is stored as the integer sum c_i p^i of its coefficient vector
// (c_0, ..., c_{e-1}) in the power basis of the defining modulus, so equality
// of codes is equality of coefficient vectors. Multiplication goes through
// discrete log / antilog tables, addition through a Zech logarithm table.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "asmgal/error.hpp"

namespace asmgal {

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense polynomials over F_p as small integer vectors, low degree first.
// Only used while constructing a field.
using SmallPoly = std::vector<std::uint32_t>;

inline void trim(SmallPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// remainder of a modulo b (b nonzero)
inline SmallPoly small_rem(SmallPoly a, const SmallPoly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() > db) {
    const std::uint32_t f = static_cast<std::uint32_t>(std::uint64_t(a.back()) * lead_inv % p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + std::uint64_t(p - f) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

inline SmallPoly decode_monic(std::uint64_t code, std::uint32_t p, std::uint32_t deg) {
  SmallPoly f(deg + 1, 0);
  for (std::uint32_t i = 0; i < deg; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  f[deg] = 1;
  return f;
}

inline bool is_irreducible(const SmallPoly& f, std::uint32_t p) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
  if (n <= 1) return true;
  if (f[0] == 0) return false;
  for (std::uint32_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      if (small_rem(f, decode_monic(code, p, d), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Immutable description of F_{p^e} plus its arithmetic tables.
class FieldCtx {
 public:
  static constexpr std::uint64_t kDefaultBound = std::uint64_t{1} << 20;
  static constexpr std::uint32_t kNone = 0xffffffffu;

  FieldCtx(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
    size_ = 1;
    for (std::uint32_t i = 0; i < e; ++i) size_ *= p;
    order_ = size_ - 1;
    choose_modulus();
    build_tables();
  }

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return e_; }
  std::uint32_t size() const noexcept { return size_; }
  /// Monic modulus, low degree first (length e+1). The prime field uses T.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  /// Code of the primitive element used for the log tables.
  std::uint32_t primitive() const noexcept { return exp_[1]; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    if (a == 0) return b;
    if (b == 0) return a;
    if (p_ == 2) return a ^ b;
    const std::uint32_t la = log_[a], lb = log_[b];
    const std::uint32_t d = lb >= la ? lb - la : lb + order_ - la;
    const std::uint32_t z = zech_[d];
    if (z == kNone) return 0;
    return exp_[la + z];
  }
  std::uint32_t neg(std::uint32_t a) const noexcept {
    if (a == 0 || p_ == 2) return a;
    return exp_[log_[a] + order_ / 2];
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return exp_[(order_ - log_[a]) % order_];
  }
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
  std::uint32_t pow(std::uint32_t a, std::uint64_t n) const noexcept {
    if (n == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t l = (std::uint64_t(log_[a]) * (n % order_)) % order_;
    return exp_[l];
  }
  /// Discrete log with respect to primitive(); a must be nonzero.
  std::uint32_t log(std::uint32_t a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "log of zero");
    return log_[a];
  }
  std::uint32_t exp(std::uint64_t k) const noexcept { return exp_[k % order_]; }

  std::vector<std::uint32_t> coords(std::uint32_t a) const {
    std::vector<std::uint32_t> v(e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
      v[i] = a % p_;
      a /= p_;
    }
    return v;
  }
  std::uint32_t from_coords(std::span<const std::uint32_t> v) const {
    if (v.size() > e_) throw Error(ErrorCode::InvalidArgument, "too many coordinates");
    std::uint32_t code = 0, scale = 1;
    for (std::uint32_t c : v) {
      if (c >= p_) throw Error(ErrorCode::InvalidArgument, "coordinate not reduced mod p");
      code += c * scale;
      scale *= p_;
    }
    return code;
  }

 private:
  void choose_modulus() {
    if (e_ == 1) {
      modulus_ = {0, 1};
      return;
    }
    const std::uint64_t count = size_;
    for (std::uint64_t code = 0; code < count; ++code) {
      auto f = detail::decode_monic(code, p_, e_);
      if (detail::is_irreducible(f, p_)) {
        modulus_ = std::move(f);
        return;
      }
    }
    throw Error(ErrorCode::DegreeOutOfRange, "no irreducible polynomial found");
  }

  // multiply coefficient vector a by b modulo modulus_ (slow path, construction only)
  std::vector<std::uint32_t> slow_mul(const std::vector<std::uint32_t>& a,
                                      const std::vector<std::uint32_t>& b) const {
    if (e_ == 1) return {static_cast<std::uint32_t>(std::uint64_t(a[0]) * b[0] % p_)};
    std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i)
      for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p_;
    for (std::size_t k = prod.size(); k-- > e_;) {
      const std::uint64_t f = prod[k];
      if (f == 0) continue;
      for (std::uint32_t i = 0; i < e_; ++i)
        prod[k - e_ + i] = (prod[k - e_ + i] + (p_ - f) * modulus_[i]) % p_;
      prod[k] = 0;
    }
    std::vector<std::uint32_t> out(e_);
    for (std::uint32_t i = 0; i < e_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return out;
  }

  std::vector<std::uint32_t> slow_pow(std::vector<std::uint32_t> base, std::uint64_t n) const {
    std::vector<std::uint32_t> r(e_, 0);
    r[0] = 1;
    while (n) {
      if (n & 1) r = slow_mul(r, base);
      base = slow_mul(base, base);
      n >>= 1;
    }
    return r;
  }

  bool is_one(const std::vector<std::uint32_t>& v) const {
    if (v[0] != 1) return false;
    for (std::uint32_t i = 1; i < e_; ++i)
      if (v[i]) return false;
    return true;
  }

  void build_tables() {
    const auto factors = detail::prime_factors(order_);
    std::vector<std::uint32_t> gen;
    for (std::uint32_t code = 1; code < size_; ++code) {
      auto cand = coords(code);
      bool primitive = true;
      for (auto r : factors) {
        if (is_one(slow_pow(cand, order_ / r))) {
          primitive = false;
          break;
        }
      }
      if (order_ == 1 || primitive) {
        gen = std::move(cand);
        break;
      }
    }
    exp_.assign(2 * std::size_t(order_) + 1, 0);
    log_.assign(size_, kNone);
    std::vector<std::uint32_t> cur(e_, 0);
    cur[0] = 1;
    for (std::uint32_t k = 0; k < order_; ++k) {
      const std::uint32_t code = from_coords(cur);
      exp_[k] = code;
      log_[code] = k;
      cur = slow_mul(cur, gen);
    }
    for (std::size_t k = order_; k < exp_.size(); ++k) exp_[k] = exp_[k - order_];
    zech_.assign(order_, kNone);
    if (p_ != 2) {
      for (std::uint32_t d = 0; d < order_; ++d) {
        const std::uint32_t v = exp_[d];
        const std::uint32_t c0 = v % p_;
        const std::uint32_t w = v - c0 + (c0 + 1) % p_;
        zech_[d] = w == 0 ? kNone : log_[w];
      }
    }
  }

  std::uint32_t p_, e_, size_ = 1, order_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_, log_, zech_;
};

/// Returns the (process-wide, cached) context for F_{p^e}.
/// The modulus is the lexicographically smallest monic irreducible of degree e.
inline const FieldCtx& build_field(std::uint32_t p, std::uint32_t e,
                                   std::uint64_t bound = FieldCtx::kDefaultBound) {
  if (!detail::is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorCode::DegreeOutOfRange, "extension degree must be >= 1");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    size *= p;
    if (size > bound)
      throw Error(ErrorCode::DegreeOutOfRange,
                  std::to_string(p) + "^" + std::to_string(e) + " exceeds the field size bound");
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FieldCtx>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[{p, e}];
  if (!slot) slot = std::make_unique<FieldCtx>(p, e);
  return *slot;
}

/// A field element: a code plus the context it lives in.
class Fe {
 public:
  Fe() = default;
  Fe(const FieldCtx& f, std::uint32_t code) : f_(&f), v_(code) {
    if (code >= f.size()) throw Error(ErrorCode::InvalidArgument, "element code out of range");
  }
  static Fe zero(const FieldCtx& f) { return Fe(f, 0); }
  static Fe one(const FieldCtx& f) { return Fe(f, 1); }

  const FieldCtx& field() const {
    if (!f_) throw Error(ErrorCode::ContextMismatch, "element has no field");
    return *f_;
  }
  const FieldCtx* field_ptr() const noexcept { return f_; }
  std::uint32_t code() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }
  bool is_one() const noexcept { return v_ == 1; }
  std::vector<std::uint32_t> coords() const { return field().coords(v_); }

  friend Fe operator+(Fe a, Fe b) { return Fe(same(a, b), a.f_->add(a.v_, b.v_), raw{}); }
  friend Fe operator-(Fe a, Fe b) { return Fe(same(a, b), a.f_->sub(a.v_, b.v_), raw{}); }
  friend Fe operator*(Fe a, Fe b) { return Fe(same(a, b), a.f_->mul(a.v_, b.v_), raw{}); }
  friend Fe operator/(Fe a, Fe b) { return Fe(same(a, b), a.f_->div(a.v_, b.v_), raw{}); }
  Fe operator-() const { return Fe(field(), f_->neg(v_), raw{}); }
  Fe& operator+=(Fe b) { return *this = *this + b; }
  Fe& operator-=(Fe b) { return *this = *this - b; }
  Fe& operator*=(Fe b) { return *this = *this * b; }

  Fe inv() const { return Fe(field(), f_->inv(v_), raw{}); }
  Fe pow(std::uint64_t n) const { return Fe(field(), f_->pow(v_, n), raw{}); }

  friend bool operator==(Fe a, Fe b) noexcept { return a.f_ == b.f_ && a.v_ == b.v_; }
  friend bool operator<(Fe a, Fe b) noexcept { return a.v_ < b.v_; }

 private:
  struct raw {};
  Fe(const FieldCtx& f, std::uint32_t code, raw) : f_(&f), v_(code) {}

  static const FieldCtx& same(Fe a, Fe b) {
    if (!a.f_ || a.f_ != b.f_) throw Error(ErrorCode::ContextMismatch, "operands from different fields");
    return *a.f_;
  }

  const FieldCtx* f_ = nullptr;
  std::uint32_t v_ = 0;
};

namespace detail {
inline std::uint32_t log_base(std::uint64_t s, std::uint32_t p) {
  std::uint32_t d = 0;
  if (s == 0) throw Error(ErrorCode::BadBase, "0 is not a power of p");
  while (s % p == 0) {
    s /= p;
    ++d;
  }
  if (s != 1) throw Error(ErrorCode::BadBase, "not a power of the characteristic");
  return d;
}
}  // namespace detail

/// x^s for s a power of the characteristic.
inline Fe frobenius(Fe x, std::uint64_t s) {
  detail::log_base(s, x.field().p());
  return x.pow(s);
}

/// True iff x lies in the subfield of cardinality s, i.e. x^s = x.
inline bool in_subfield(Fe x, std::uint64_t s) {
  const auto& f = x.field();
  const std::uint32_t d = detail::log_base(s, f.p());
  if (d == 0 || f.degree() % d != 0)
    throw Error(ErrorCode::BadBase, "subfield cardinality incompatible with the field");
  return x.pow(s) == x;
}

}  // namespace asmgal
