#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "asmgal/error.hpp"
#include "asmgal/field.hpp"

namespace asmgal {

/// Dense univariate polynomial over one field, low degree first, no trailing zeros.
class Poly {
 public:
  explicit Poly(const FieldCtx& f) : f_(&f) {}
  Poly(const FieldCtx& f, std::vector<std::uint32_t> coeffs) : f_(&f), c_(std::move(coeffs)) { trim(); }
  Poly(const FieldCtx& f, const std::vector<Fe>& coeffs) : f_(&f) {
    c_.reserve(coeffs.size());
    for (Fe x : coeffs) {
      if (x.field_ptr() != f_) throw Error(ErrorCode::ContextMismatch, "coefficient from another field");
      c_.push_back(x.code());
    }
    trim();
  }

  static Poly constant(Fe a) { return Poly(a.field(), std::vector<std::uint32_t>{a.code()}); }
  static Poly x(const FieldCtx& f) { return Poly(f, std::vector<std::uint32_t>{0, 1}); }
  /// a*X^n
  static Poly monomial(Fe a, std::size_t n) {
    std::vector<std::uint32_t> c(n + 1, 0);
    c[n] = a.code();
    return Poly(a.field(), std::move(c));
  }
  /// X - r
  static Poly linear_root(Fe r) {
    const auto& f = r.field();
    return Poly(f, std::vector<std::uint32_t>{f.neg(r.code()), 1});
  }

  const FieldCtx& field() const { return *f_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Fe coeff(std::size_t i) const { return Fe(*f_, i < c_.size() ? c_[i] : 0); }
  Fe lead() const { return coeff(c_.empty() ? 0 : c_.size() - 1); }
  const std::vector<std::uint32_t>& raw() const noexcept { return c_; }

  Fe eval(Fe x) const {
    check(x);
    std::uint32_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x.code()), c_[i]);
    return Fe(*f_, acc);
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    same(a, b);
    const auto& f = *a.f_;
    std::vector<std::uint32_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = f.add(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
    return Poly(f, std::move(r));
  }
  Poly operator-() const {
    std::vector<std::uint32_t> r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_->neg(c_[i]);
    return Poly(*f_, std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    same(a, b);
    const auto& f = *a.f_;
    if (a.is_zero() || b.is_zero()) return Poly(f);
    std::vector<std::uint32_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.c_[i]) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return Poly(f, std::move(r));
  }
  Poly scaled(Fe s) const {
    check(s);
    std::vector<std::uint32_t> r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_->mul(c_[i], s.code());
    return Poly(*f_, std::move(r));
  }
  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inv());
  }
  Poly derivative() const {
    std::vector<std::uint32_t> r(c_.size() > 1 ? c_.size() - 1 : 0);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      std::uint32_t m = 0;
      for (std::size_t k = 0; k < i % f_->p(); ++k) m = f_->add(m, c_[i]);
      r[i - 1] = m;
    }
    return Poly(*f_, std::move(r));
  }

  /// Quotient and remainder; throws DivisionByZero for a zero divisor.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    same(a, b);
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    const auto& f = *a.f_;
    std::vector<std::uint32_t> r = a.c_;
    const std::size_t db = b.c_.size() - 1;
    if (r.size() <= db) return {Poly(f), a};
    std::vector<std::uint32_t> q(r.size() - db, 0);
    const std::uint32_t li = f.inv(b.c_.back());
    for (std::size_t k = r.size(); k-- > db;) {
      const std::uint32_t t = f.mul(r[k], li);
      q[k - db] = t;
      if (!t) continue;
      for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = f.sub(r[k - db + i], f.mul(t, b.c_[i]));
    }
    r.resize(db);
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
  }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

 private:
  void trim() {
    for (auto v : c_)
      if (v >= f_->size()) throw Error(ErrorCode::InvalidArgument, "coefficient code out of range");
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  void check(Fe x) const {
    if (x.field_ptr() != f_) throw Error(ErrorCode::ContextMismatch, "element from another field");
  }
  static void same(const Poly& a, const Poly& b) {
    if (a.f_ != b.f_) throw Error(ErrorCode::ContextMismatch, "polynomials over different fields");
  }

  const FieldCtx* f_;
  std::vector<std::uint32_t> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// base^n mod m.
inline Poly powmod(Poly base, std::uint64_t n, const Poly& m) {
  Poly r = Poly::constant(Fe::one(m.field())) % m;
  base = base % m;
  while (n) {
    if (n & 1) r = (r * base) % m;
    n >>= 1;
    if (n) base = (base * base) % m;
  }
  return r;
}

struct Root {
  Fe value;
  int multiplicity;
};

namespace detail {

// Split a monic squarefree product of distinct linear factors into its roots.
inline void split_linear(const Poly& g, std::vector<Fe>& out) {
  const auto& f = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-(g.coeff(0) / g.coeff(1)));
    return;
  }
  // Tr(beta*X) mod g takes values in F_p on the roots; for some beta in a
  // power basis two distinct roots receive different trace values.
  const Poly x = Poly::x(f);
  for (std::uint32_t k = 0; k < f.degree(); ++k) {
    const Fe beta(f, f.exp(k));
    Poly term = x.scaled(beta) % g;
    Poly tr = term;
    for (std::uint32_t i = 1; i < f.degree(); ++i) {
      term = powmod(term, f.p(), g);
      tr = tr + term;
    }
    std::vector<Poly> parts;
    Poly rest = g;
    for (std::uint32_t c = 0; c < f.p() && rest.degree() > 0; ++c) {
      Poly h = gcd(rest, tr - Poly::constant(Fe(f, c)));
      if (h.degree() > 0) {
        parts.push_back(h);
        rest = (rest / h).monic();
      }
    }
    if (parts.size() > 1) {
      for (const auto& h : parts) split_linear(h, out);
      return;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "polynomial is not a product of distinct linear factors");
}

}  // namespace detail

/// All roots of f in its coefficient field, with multiplicities, sorted by code.
/// The split part gcd(f, X^Q - X) is factored by trace splitting; multiplicities
/// come from repeated deflation.
inline std::vector<Root> poly_roots(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  const auto& F = f.field();
  std::vector<Root> out;
  if (f.degree() == 0) return out;
  const Poly m = f.monic();
  const Poly x = Poly::x(F);
  const Poly split = gcd(m, powmod(x, F.size(), m) - x);
  std::vector<Fe> roots;
  detail::split_linear(split, roots);
  std::sort(roots.begin(), roots.end());
  for (Fe r : roots) {
    int mult = 0;
    Poly cur = m;
    const Poly lin = Poly::linear_root(r);
    while (true) {
      auto [qt, rm] = divmod(cur, lin);
      if (!rm.is_zero()) break;
      ++mult;
      cur = std::move(qt);
    }
    out.push_back({r, mult});
  }
  return out;
}

/// Reference root finder: evaluate at every element of the field, then deflate.
inline std::vector<Root> poly_roots_exhaustive(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  const auto& F = f.field();
  std::vector<Root> out;
  for (std::uint32_t v = 0; v < F.size(); ++v) {
    const Fe r(F, v);
    if (!f.eval(r).is_zero()) continue;
    int mult = 0;
    Poly cur = f;
    const Poly lin = Poly::linear_root(r);
    while (cur.degree() > 0) {
      auto [qt, rm] = divmod(cur, lin);
      if (!rm.is_zero()) break;
      ++mult;
      cur = std::move(qt);
    }
    out.push_back({r, mult});
  }
  return out;
}

}  // namespace asmgal
