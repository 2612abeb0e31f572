#pragma once

#include <cstdint>
#include <vector>

#include "asmgal/error.hpp"
#include "asmgal/field.hpp"

namespace asmgal {

/// Power series truncated at t^N (N = precision), coefficients in one field.
class Series {
 public:
  Series(const FieldCtx& f, std::size_t precision) : f_(&f), c_(precision, 0) {}

  static Series constant(Fe a, std::size_t precision) {
    Series s(a.field(), precision);
    if (precision) s.c_[0] = a.code();
    return s;
  }
  /// a * t^k
  static Series monomial(Fe a, std::size_t k, std::size_t precision) {
    Series s(a.field(), precision);
    if (k < precision) s.c_[k] = a.code();
    return s;
  }

  const FieldCtx& field() const noexcept { return *f_; }
  std::size_t precision() const noexcept { return c_.size(); }
  Fe operator[](std::size_t i) const { return Fe(*f_, c_.at(i)); }
  void set(std::size_t i, Fe a) { c_.at(i) = a.code(); }

  /// Index of the first nonzero coefficient, or precision() if none is visible.
  std::size_t order() const noexcept {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i]) return i;
    return c_.size();
  }
  bool is_zero() const noexcept { return order() == c_.size(); }

  friend Series operator+(const Series& a, const Series& b) {
    check(a, b);
    Series r(*a.f_, a.c_.size());
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.f_->add(a.c_[i], b.c_[i]);
    return r;
  }
  friend Series operator-(const Series& a, const Series& b) {
    check(a, b);
    Series r(*a.f_, a.c_.size());
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.f_->sub(a.c_[i], b.c_[i]);
    return r;
  }
  Series operator-() const {
    Series r(*f_, c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_->neg(c_[i]);
    return r;
  }
  friend Series operator*(const Series& a, const Series& b) {
    check(a, b);
    const auto& f = *a.f_;
    const std::size_t n = a.c_.size();
    Series r(f, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!a.c_[i]) continue;
      for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] = f.add(r.c_[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return r;
  }
  Series scaled(Fe s) const {
    if (s.field_ptr() != f_) throw Error(ErrorCode::ContextMismatch, "scalar from another field");
    Series r(*f_, c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_->mul(c_[i], s.code());
    return r;
  }

  /// Multiplicative inverse; the constant term must be nonzero.
  Series inverse() const {
    if (c_.empty() || c_[0] == 0) throw Error(ErrorCode::DivisionByZero, "series with zero constant term");
    const auto& f = *f_;
    const std::size_t n = c_.size();
    Series r(f, n);
    const std::uint32_t i0 = f.inv(c_[0]);
    r.c_[0] = i0;
    for (std::size_t k = 1; k < n; ++k) {
      std::uint32_t acc = 0;
      for (std::size_t j = 1; j <= k; ++j) acc = f.add(acc, f.mul(c_[j], r.c_[k - j]));
      r.c_[k] = f.neg(f.mul(acc, i0));
    }
    return r;
  }

  /// s(t)^Q for Q a power of the characteristic: coefficients raised to Q, exponents scaled by Q.
  Series frobenius(std::uint64_t Q) const {
    Series r(*f_, c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i]) continue;
      const std::uint64_t k = std::uint64_t(i) * Q;
      if (k >= c_.size()) break;
      r.c_[k] = f_->pow(c_[i], Q);
    }
    return r;
  }

 private:
  static void check(const Series& a, const Series& b) {
    if (a.f_ != b.f_) throw Error(ErrorCode::ContextMismatch, "series over different fields");
    if (a.c_.size() != b.c_.size()) throw Error(ErrorCode::InvalidArgument, "series precisions differ");
  }

  const FieldCtx* f_;
  std::vector<std::uint32_t> c_;
};

/// The solution u with u(0) = 0 of u^q - u = s, for ord(s) >= 1:
/// u = -(s + s^q + s^{q^2} + ...), truncated.
inline Series artin_schreier_solve(const Series& s, std::uint64_t q) {
  if (s.precision() && !s[0].is_zero())
    throw Error(ErrorCode::InvalidArgument, "Artin-Schreier right-hand side must vanish at 0");
  Series acc(s.field(), s.precision());
  Series term = s;
  while (!term.is_zero()) {
    acc = acc + term;
    term = term.frobenius(q);
  }
  return -acc;
}

}  // namespace asmgal
