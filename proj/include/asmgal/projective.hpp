#pragma once

// Points, hyperplanes and lines of P^3 over a finite field.
// Coordinates are ordered (X, Y, Z, W). Lines are kept as the reduced
// row-echelon basis of the pencil of hyperplanes that contain them.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <set>
#include <vector>

#include "asmgal/error.hpp"
#include "asmgal/field.hpp"

namespace asmgal {

using Vec4 = std::array<Fe, 4>;

namespace detail {

inline const FieldCtx& field_of(const Vec4& v) {
  const FieldCtx* f = v[0].field_ptr();
  for (const auto& x : v)
    if (x.field_ptr() != f || !f) throw Error(ErrorCode::ContextMismatch, "mixed coordinate fields");
  return *f;
}

inline Vec4 normalized(Vec4 v) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (!v[i].is_zero()) {
      const Fe s = v[i].inv();
      for (auto& x : v) x = x * s;
      return v;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "all homogeneous coordinates are zero");
}

inline Fe dot(const Vec4& a, const Vec4& b) {
  Fe acc = a[0] * b[0];
  for (std::size_t i = 1; i < 4; ++i) acc += a[i] * b[i];
  return acc;
}

inline std::array<std::uint32_t, 4> codes(const Vec4& v) {
  return {v[0].code(), v[1].code(), v[2].code(), v[3].code()};
}

/// Reduced row-echelon form; zero rows are dropped.
inline std::vector<Vec4> rref(std::vector<Vec4> rows) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < 4 && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Fe s = rows[r][col].inv();
    for (auto& x : rows[r]) x = x * s;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      const Fe m = rows[i][col];
      for (std::size_t j = 0; j < 4; ++j) rows[i][j] = rows[i][j] - m * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

/// Basis of {v : row . v = 0 for every row}.
inline std::vector<Vec4> nullspace(const std::vector<Vec4>& rows, const FieldCtx& f) {
  const auto red = rref(rows);
  std::array<int, 4> pivot_row{-1, -1, -1, -1};
  for (std::size_t i = 0; i < red.size(); ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!red[i][j].is_zero()) {
        pivot_row[j] = static_cast<int>(i);
        break;
      }
  std::vector<Vec4> out;
  for (std::size_t freec = 0; freec < 4; ++freec) {
    if (pivot_row[freec] >= 0) continue;
    Vec4 v{Fe::zero(f), Fe::zero(f), Fe::zero(f), Fe::zero(f)};
    v[freec] = Fe::one(f);
    for (std::size_t j = 0; j < 4; ++j)
      if (pivot_row[j] >= 0) v[j] = -red[pivot_row[j]][freec];
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

/// Point of P^3, first nonzero coordinate scaled to 1.
class ProjPoint3 {
 public:
  explicit ProjPoint3(const Vec4& v) : c_(detail::normalized(v)) { detail::field_of(c_); }
  const Vec4& coords() const noexcept { return c_; }
  const FieldCtx& field() const { return *c_[0].field_ptr(); }
  Fe operator[](std::size_t i) const { return c_.at(i); }
  friend bool operator==(const ProjPoint3& a, const ProjPoint3& b) { return a.c_ == b.c_; }
  friend bool operator<(const ProjPoint3& a, const ProjPoint3& b) {
    return detail::codes(a.c_) < detail::codes(b.c_);
  }

 private:
  Vec4 c_;
};

/// Hyperplane h_X X + h_Y Y + h_Z Z + h_W W = 0, normalized like a point.
class Hyperplane {
 public:
  explicit Hyperplane(const Vec4& h) : h_(detail::normalized(h)) { detail::field_of(h_); }
  const Vec4& coeffs() const noexcept { return h_; }
  const FieldCtx& field() const { return *h_[0].field_ptr(); }
  Fe operator[](std::size_t i) const { return h_.at(i); }
  /// Value of the linear form on a representative vector.
  Fe eval(const Vec4& v) const { return detail::dot(h_, v); }
  bool contains(const ProjPoint3& P) const {
    if (P.coords()[0].field_ptr() != h_[0].field_ptr())
      throw Error(ErrorCode::ContextMismatch, "point and hyperplane over different fields");
    return eval(P.coords()).is_zero();
  }
  friend bool operator==(const Hyperplane& a, const Hyperplane& b) { return a.h_ == b.h_; }
  friend bool operator<(const Hyperplane& a, const Hyperplane& b) {
    return detail::codes(a.h_) < detail::codes(b.h_);
  }

 private:
  Vec4 h_;
};

/// Line of P^3 as the canonical (RREF) basis of its pencil of hyperplanes.
class Line3 {
 public:
  /// The line {h1 = h2 = 0}; throws DegenerateLine if h1, h2 are dependent.
  Line3(const Vec4& h1, const Vec4& h2) {
    const auto& f = detail::field_of(h1);
    if (&detail::field_of(h2) != &f) throw Error(ErrorCode::ContextMismatch, "equations over different fields");
    auto red = detail::rref({h1, h2});
    if (red.size() != 2) throw Error(ErrorCode::DegenerateLine, "defining forms are linearly dependent");
    h1_ = red[0];
    h2_ = red[1];
  }
  Line3(const Hyperplane& a, const Hyperplane& b) : Line3(a.coeffs(), b.coeffs()) {}

  const Vec4& h1() const noexcept { return h1_; }
  const Vec4& h2() const noexcept { return h2_; }
  const FieldCtx& field() const { return *h1_[0].field_ptr(); }

  /// Two points spanning the line.
  std::array<Vec4, 2> span() const {
    auto ns = detail::nullspace({h1_, h2_}, field());
    return {ns[0], ns[1]};
  }

  friend bool operator==(const Line3& a, const Line3& b) { return a.h1_ == b.h1_ && a.h2_ == b.h2_; }
  friend bool operator<(const Line3& a, const Line3& b) {
    const auto ka = std::pair(detail::codes(a.h1_), detail::codes(a.h2_));
    const auto kb = std::pair(detail::codes(b.h1_), detail::codes(b.h2_));
    return ka < kb;
  }

 private:
  Vec4 h1_, h2_;
};

/// Canonical pencil basis (H1, H2): every hyperplane through the line is lambda*H1 + mu*H2.
inline std::pair<Vec4, Vec4> pencil_basis(const Line3& l) { return {l.h1(), l.h2()}; }

inline Line3 line_through(const ProjPoint3& P, const ProjPoint3& Q) {
  if (P == Q) throw Error(ErrorCode::CoincidentPoints, "a line needs two distinct points");
  const auto ns = detail::nullspace({P.coords(), Q.coords()}, P.field());
  return Line3(ns[0], ns[1]);
}

inline bool contains(const Hyperplane& H, const ProjPoint3& P) { return H.contains(P); }

inline bool contains(const Line3& l, const ProjPoint3& P) {
  if (&l.field() != &P.field()) throw Error(ErrorCode::ContextMismatch, "line and point over different fields");
  return detail::dot(l.h1(), P.coords()).is_zero() && detail::dot(l.h2(), P.coords()).is_zero();
}

/// Line contained in hyperplane.
inline bool contains(const Hyperplane& H, const Line3& l) {
  if (&l.field() != &H.field()) throw Error(ErrorCode::ContextMismatch, "line and hyperplane over different fields");
  for (const auto& v : l.span())
    if (!H.eval(v).is_zero()) return false;
  return true;
}

/// Whether the pencil basis has all coefficients in the subfield of cardinality q.
inline bool is_fq_line(const Line3& l, std::uint64_t q) {
  for (const auto* h : {&l.h1(), &l.h2()})
    for (const Fe& x : *h)
      if (!in_subfield(x, q)) return false;
  return true;
}

namespace detail {
inline std::vector<Vec4> projective_points(const std::vector<Fe>& elems) {
  const auto& f = elems.front().field();
  const Fe zero = Fe::zero(f), one = Fe::one(f);
  std::vector<Vec4> out;
  for (std::size_t lead = 0; lead < 4; ++lead) {
    std::size_t free = 3 - lead;
    std::size_t total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= elems.size();
    for (std::size_t n = 0; n < total; ++n) {
      Vec4 v{zero, zero, zero, zero};
      v[lead] = one;
      std::size_t m = n;
      for (std::size_t j = lead + 1; j < 4; ++j) {
        v[j] = elems[m % elems.size()];
        m /= elems.size();
      }
      out.push_back(v);
    }
  }
  return out;
}
}  // namespace detail

/// All lines of a plane whose equations have coefficients in the given subfield
/// (passed as its list of elements), sorted by canonical form.
inline std::vector<Line3> enumerate_plane_fq_lines(const std::vector<Fe>& fq, const Hyperplane& plane) {
  std::set<Line3> lines;
  for (const auto& h : detail::projective_points(fq)) {
    if (detail::rref({plane.coeffs(), h}).size() < 2) continue;
    lines.insert(Line3(plane.coeffs(), h));
  }
  return {lines.begin(), lines.end()};
}

/// The F_q-lines of {Z = 0}.
inline std::vector<Line3> enumerate_plane_fq_lines(const std::vector<Fe>& fq) {
  const auto& f = fq.front().field();
  const Fe z = Fe::zero(f), o = Fe::one(f);
  return enumerate_plane_fq_lines(fq, Hyperplane(Vec4{z, z, o, z}));
}

/// All lines of P^3 defined over the given subfield.
inline std::vector<Line3> enumerate_fq_lines(const std::vector<Fe>& fq) {
  std::set<Line3> lines;
  const auto pts = detail::projective_points(fq);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) lines.insert(Line3(pts[i], pts[j]));
  return {lines.begin(), lines.end()};
}

}  // namespace asmgal
