#pragma once

// The Artin-Schreier-Mumford curve (x^q - x)(y^q - y) = c and its embedding
// (x : y : 1 : xy) into P^3.
//
// All geometry is carried out in one ambient field F_{q^K}; the fields F_{q^k}
// for k | K are handled as its subfields, which keeps every embedding in the
// tower mutually compatible. The smooth model has exactly 2q points that are
// not affine: P_a (pole of x, y = a) and Q_a (pole of y, x = a), a in F_q.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "asmgal/embedding.hpp"
#include "asmgal/error.hpp"
#include "asmgal/field.hpp"
#include "asmgal/poly.hpp"
#include "asmgal/projective.hpp"
#include "asmgal/series.hpp"

namespace asmgal {

namespace detail {
inline std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be a prime power");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
  return {p, e};
}

inline std::uint64_t ipow(std::uint64_t b, std::uint32_t n) {
  std::uint64_t r = 1;
  while (n--) r *= b;
  return r;
}
}  // namespace detail

class CurveParams {
 public:
  /// Largest K in {6, 4, 3, 2, 1} with q^K inside the field size bound.
  static std::uint32_t default_ambient_degree(std::uint32_t q) {
    for (std::uint32_t k : {6u, 4u, 3u, 2u, 1u})
      if (detail::ipow(q, k) <= FieldCtx::kDefaultBound) return k;
    return 1;
  }

  /// q >= 3 a prime power; c given by its code in F_q (nonzero).
  explicit CurveParams(std::uint32_t q, std::uint32_t c_code = 1, std::uint32_t ambient_degree = 0) : q_(q) {
    std::tie(p_, e_) = detail::prime_power(q);
    if (q < 3) throw Error(ErrorCode::InvalidArgument, "q must be at least 3");
    K_ = ambient_degree ? ambient_degree : default_ambient_degree(q);
    base_ = &build_field(p_, e_);
    ambient_ = &build_field(p_, e_ * K_);
    for (std::uint32_t k = 1; k <= K_; ++k) {
      if (K_ % k) continue;
      levels_.push_back(k);
      const FieldCtx& f = build_field(p_, e_ * k);
      level_fields_[k] = &f;
      level_embed_[k] = std::make_shared<Embedding>(f, *ambient_);
    }
    if (c_code == 0 || c_code >= q) throw Error(ErrorCode::InvalidArgument, "c must be a nonzero element of F_q");
    c_base_ = Fe(*base_, c_code);
    c_ = from_base(c_base_);
    for (std::uint32_t k : levels_) {
      if (k == K_) continue;
      auto& list = subfields_[k];
      const std::uint64_t qk = detail::ipow(q_, k);
      const std::uint64_t step = (ambient_->size() - 1) / (qk - 1);
      list.push_back(Fe::zero(*ambient_));
      for (std::uint64_t j = 0; j + 1 < qk; ++j) list.push_back(Fe(*ambient_, ambient_->exp(j * step)));
      std::sort(list.begin(), list.end());
    }
  }

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint32_t ambient_degree() const noexcept { return K_; }
  const std::vector<std::uint32_t>& levels() const noexcept { return levels_; }

  const FieldCtx& base() const noexcept { return *base_; }
  const FieldCtx& ambient() const noexcept { return *ambient_; }
  const FieldCtx& level_field(std::uint32_t k) const { return *level_fields_.at(k); }
  const Embedding& level_embedding(std::uint32_t k) const { return *level_embed_.at(k); }

  Fe c() const noexcept { return c_; }
  Fe c_base() const noexcept { return c_base_; }
  Fe zero() const { return Fe::zero(*ambient_); }
  Fe one() const { return Fe::one(*ambient_); }

  /// F_q element -> ambient.
  Fe from_base(Fe x) const { return level_embedding(1)(x); }
  Fe from_base(std::uint32_t code) const { return from_base(Fe(*base_, code)); }
  /// Element of the standalone F_{q^k} -> ambient.
  Fe lift(Fe x, std::uint32_t k) const { return level_embedding(k)(x); }

  /// Elements of F_{q^k} inside the ambient field, sorted by code (k | K, k < K).
  const std::vector<Fe>& subfield(std::uint32_t k) const {
    auto it = subfields_.find(k);
    if (it == subfields_.end()) throw Error(ErrorCode::InvalidArgument, "no stored subfield of that degree");
    return it->second;
  }
  const std::vector<Fe>& fq() const { return subfield(1); }

  bool in_level(Fe x, std::uint32_t k) const { return x.pow(detail::ipow(q_, k)) == x; }
  bool in_fq(Fe x) const { return in_level(x, 1); }
  /// Smallest k | K with x in F_{q^k}.
  std::uint32_t level(Fe x) const {
    for (std::uint32_t k : levels_)
      if (in_level(x, k)) return k;
    return K_;
  }
  /// Coordinates of x relative to the standalone F_{q^k} (x must lie in it).
  std::vector<std::uint32_t> level_coords(Fe x, std::uint32_t k) const {
    auto pre = level_embedding(k).preimage(x);
    if (!pre) throw Error(ErrorCode::InvalidArgument, "element not in the requested subfield");
    return pre->coords();
  }

  /// Uniform element of F_{q^k} (k | K).
  template <class Rng>
  Fe random_element(Rng& rng, std::uint32_t k) const {
    if (k == K_) return Fe(*ambient_, static_cast<std::uint32_t>(rng() % ambient_->size()));
    const auto& list = subfield(k);
    return list[rng() % list.size()];
  }
  /// Uniform element of F_{q^k} outside F_q.
  template <class Rng>
  Fe random_new_element(Rng& rng, std::uint32_t k) const {
    if (k == 1) throw Error(ErrorCode::InvalidArgument, "F_q has no elements outside F_q");
    while (true) {
      Fe x = random_element(rng, k);
      if (!in_fq(x)) return x;
    }
  }

 private:
  std::uint32_t q_, p_ = 0, e_ = 0, K_ = 0;
  const FieldCtx* base_ = nullptr;
  const FieldCtx* ambient_ = nullptr;
  std::vector<std::uint32_t> levels_;
  std::map<std::uint32_t, const FieldCtx*> level_fields_;
  std::map<std::uint32_t, std::shared_ptr<Embedding>> level_embed_;
  std::map<std::uint32_t, std::vector<Fe>> subfields_;
  Fe c_base_, c_;
};

/// A point of the smooth model.
struct CurvePoint {
  enum class Kind : std::uint8_t { Affine = 0, P = 1, Q = 2 };
  Kind kind = Kind::Affine;
  Fe x, y;  // affine coordinates; for P/Q the label alpha is stored in x

  static CurvePoint affine(Fe x, Fe y) { return {Kind::Affine, x, y}; }
  static CurvePoint pole_of_x(Fe alpha) { return {Kind::P, alpha, alpha}; }
  static CurvePoint pole_of_y(Fe alpha) { return {Kind::Q, alpha, alpha}; }

  bool is_affine() const noexcept { return kind == Kind::Affine; }
  Fe alpha() const noexcept { return x; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    return a.kind == b.kind && a.x == b.x && (a.kind != Kind::Affine || a.y == b.y);
  }
  friend bool operator<(const CurvePoint& a, const CurvePoint& b) {
    const auto ka = std::tuple(int(a.kind), a.x.code(), a.is_affine() ? a.y.code() : 0u);
    const auto kb = std::tuple(int(b.kind), b.x.code(), b.is_affine() ? b.y.code() : 0u);
    return ka < kb;
  }
};

inline Fe artin_schreier_value(const CurveParams& cp, Fe x) { return x.pow(cp.q()) - x; }

inline bool is_on_curve(const CurveParams& cp, const CurvePoint& P) {
  if (!P.is_affine()) return cp.in_fq(P.alpha());
  return artin_schreier_value(cp, P.x) * artin_schreier_value(cp, P.y) == cp.c();
}

/// Image under (x : y : 1 : xy); P_a -> (1:0:0:a), Q_a -> (0:1:0:a).
inline ProjPoint3 embed(const CurveParams& cp, const CurvePoint& P) {
  const Fe z = cp.zero(), o = cp.one();
  switch (P.kind) {
    case CurvePoint::Kind::Affine: return ProjPoint3(Vec4{P.x, P.y, o, P.x * P.y});
    case CurvePoint::Kind::P: return ProjPoint3(Vec4{o, z, z, P.alpha()});
    case CurvePoint::Kind::Q: return ProjPoint3(Vec4{z, o, z, P.alpha()});
  }
  throw Error(ErrorCode::InvalidArgument, "bad point kind");
}

/// XY - ZW = 0, the quadric containing the embedded curve.
inline bool on_quadric(const ProjPoint3& P) { return (P[0] * P[1] - P[2] * P[3]).is_zero(); }

/// The 2q points of Omega_1 then Omega_2, each ordered by label.
inline std::vector<CurvePoint> infinite_points(const CurveParams& cp) {
  std::vector<CurvePoint> out;
  for (Fe a : cp.fq()) out.push_back(CurvePoint::pole_of_x(a));
  for (Fe a : cp.fq()) out.push_back(CurvePoint::pole_of_y(a));
  return out;
}

/// Roots of u^q - u = b in the ambient field.
inline std::vector<Fe> artin_schreier_roots(const CurveParams& cp, Fe b) {
  const auto& F = cp.ambient();
  std::vector<std::uint32_t> coeffs(cp.q() + 1, 0);
  coeffs[0] = F.neg(b.code());
  coeffs[1] = F.neg(1);
  coeffs[cp.q()] = 1;
  std::vector<Fe> out;
  for (const auto& r : poly_roots(Poly(F, std::move(coeffs)))) out.push_back(r.value);
  return out;
}

/// Points found on a section, with a flag telling whether every point over
/// the algebraic closure was seen inside the ambient field.
struct Section {
  std::vector<CurvePoint> points;
  bool complete = true;
};

namespace detail {

inline Poly pow_poly(const Poly& a, std::uint64_t n) {
  Poly r = Poly::constant(Fe::one(a.field()));
  Poly b = a;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

inline void add_vertical(const CurveParams& cp, Fe x0, Section& s) {
  const Fe A = artin_schreier_value(cp, x0);
  if (A.is_zero()) return;
  const auto ys = artin_schreier_roots(cp, cp.c() / A);
  if (ys.size() < cp.q()) s.complete = false;
  for (Fe y : ys) s.points.push_back(CurvePoint::affine(x0, y));
}

}  // namespace detail

/// Affine curve points satisfying hX x + hY y + hZ + hW xy = 0, i.e. lying on
/// the hyperplane h of P^3. Covers the constraints x = x0, y = y0 and linear ones.
inline Section affine_section(const CurveParams& cp, const Vec4& h) {
  const auto& F = cp.ambient();
  for (const auto& v : h)
    if (v.field_ptr() != &F) throw Error(ErrorCode::ContextMismatch, "constraint not over the ambient field");
  if (std::all_of(h.begin(), h.end(), [](Fe v) { return v.is_zero(); }))
    throw Error(ErrorCode::DegenerateConstraint, "the zero constraint contains the whole curve");
  const Fe hX = h[0], hY = h[1], hZ = h[2], hW = h[3];
  Section s;
  if (hY.is_zero() && hW.is_zero()) {
    if (!hX.is_zero()) detail::add_vertical(cp, -hZ / hX, s);
    std::sort(s.points.begin(), s.points.end());
    return s;
  }
  const Poly D(F, std::vector<Fe>{hY, hW});
  const Poly N(F, std::vector<Fe>{hZ, hX});
  const Poly X = Poly::x(F);
  const Poly asx = detail::pow_poly(X, cp.q()) - X;
  const Poly negN = -N;
  Poly E = asx * (detail::pow_poly(negN, cp.q()) + N * detail::pow_poly(D, cp.q() - 1)) -
           detail::pow_poly(D, cp.q()).scaled(cp.c());
  std::optional<Fe> x1;
  if (!hW.is_zero()) {
    x1 = -hY / hW;
    if (N.eval(*x1).is_zero()) {
      detail::add_vertical(cp, *x1, s);
      const Poly lin = Poly::linear_root(*x1);
      while (!E.is_zero()) {
        auto [qt, rm] = divmod(E, lin);
        if (!rm.is_zero()) break;
        E = qt;
      }
    }
  }
  if (E.is_zero()) throw Error(ErrorCode::DegenerateConstraint, "constraint contains a curve component");
  if (E.degree() > 0) {
    const auto roots = poly_roots(E);
    int found = 0;
    for (const auto& r : roots) found += r.multiplicity;
    if (found < E.degree()) s.complete = false;
    for (const auto& r : roots) {
      const Fe dx = D.eval(r.value);
      if (dx.is_zero()) continue;  // pole of y: a point of Omega_2, not affine
      const Fe y = -N.eval(r.value) / dx;
      CurvePoint P = CurvePoint::affine(r.value, y);
      if (is_on_curve(cp, P)) s.points.push_back(P);
    }
  }
  std::sort(s.points.begin(), s.points.end());
  s.points.erase(std::unique(s.points.begin(), s.points.end()), s.points.end());
  return s;
}

/// Constraint x = x0 as a hyperplane coefficient vector.
inline Vec4 constraint_x(const CurveParams& cp, Fe x0) { return {cp.one(), cp.zero(), -x0, cp.zero()}; }
/// Constraint y = y0.
inline Vec4 constraint_y(const CurveParams& cp, Fe y0) { return {cp.zero(), cp.one(), -y0, cp.zero()}; }

/// Affine curve points over F_{q^k} meeting the constraint.
inline std::vector<CurvePoint> solve_affine_points(const CurveParams& cp, const Vec4& constraint, std::uint32_t k) {
  std::vector<CurvePoint> out;
  for (const auto& P : affine_section(cp, constraint).points)
    if (cp.in_level(P.x, k) && cp.in_level(P.y, k)) out.push_back(P);
  return out;
}

/// All points of the curve whose image lies on the hyperplane.
inline Section hyperplane_section(const CurveParams& cp, const Vec4& h) {
  Section s = affine_section(cp, h);
  const Hyperplane H(h);
  for (const auto& P : infinite_points(cp))
    if (H.contains(embed(cp, P))) s.points.push_back(P);
  std::sort(s.points.begin(), s.points.end());
  return s;
}

/// Truncated expansion of the four homogeneous coordinates of the embedding
/// in a local parameter at a point.
struct LocalExpansion {
  enum class Parameter { XMinusX0, YMinusY0, InverseX, InverseY };
  Parameter parameter;
  std::array<Series, 4> coords;
  std::size_t precision() const { return coords[0].precision(); }
};

namespace detail {

// Expansion at an affine point (u0, v0) in the parameter tau = u - u0, where
// v is solved from v^q - v = c / (u^q - u). Returns (u, v) series.
inline std::pair<Series, Series> affine_branch(const CurveParams& cp, Fe u0, Fe v0, std::size_t n) {
  const auto& F = cp.ambient();
  const Fe A = artin_schreier_value(cp, u0);
  Series denom = Series::constant(A, n) - Series::monomial(cp.one(), 1, n) + Series::monomial(cp.one(), cp.q(), n);
  Series R = denom.inverse().scaled(cp.c());
  Series s = R - Series::constant(R[0], n);
  Series v = artin_schreier_solve(s, cp.q()) + Series::constant(v0, n);
  Series u = Series::constant(u0, n) + Series::monomial(Fe::one(F), 1, n);
  return {u, v};
}

// At a pole: with t the reciprocal of the pole coordinate, the finite
// coordinate is alpha + u where u^q - u = c t^q / (1 - t^{q-1}).
inline Series pole_branch(const CurveParams& cp, Fe alpha, std::size_t n) {
  Series denom = Series::constant(cp.one(), n) - Series::monomial(cp.one(), cp.q() - 1, n);
  Series s = Series::monomial(cp.c(), cp.q(), n) * denom.inverse();
  return artin_schreier_solve(s, cp.q()) + Series::constant(alpha, n);
}

}  // namespace detail

inline LocalExpansion local_expansion(const CurveParams& cp, const CurvePoint& P, std::size_t precision) {
  if (precision < 1) throw Error(ErrorCode::PrecisionTooSmall, "precision must be at least 1");
  const std::size_t n = precision;
  const Fe one = cp.one();
  const Series t = Series::monomial(one, 1, n);
  const Series unit = Series::constant(one, n);
  switch (P.kind) {
    case CurvePoint::Kind::P: {
      Series y = detail::pole_branch(cp, P.alpha(), n);
      return {LocalExpansion::Parameter::InverseX, {unit, y * t, t, y}};
    }
    case CurvePoint::Kind::Q: {
      Series x = detail::pole_branch(cp, P.alpha(), n);
      return {LocalExpansion::Parameter::InverseY, {x * t, unit, t, x}};
    }
    case CurvePoint::Kind::Affine: {
      if (!artin_schreier_value(cp, P.x).is_zero()) {
        auto [x, y] = detail::affine_branch(cp, P.x, P.y, n);
        return {LocalExpansion::Parameter::XMinusX0, {x, y, unit, x * y}};
      }
      auto [y, x] = detail::affine_branch(cp, P.y, P.x, n);
      return {LocalExpansion::Parameter::YMinusY0, {x, y, unit, x * y}};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "bad point kind");
}

/// The linear form h composed with the local expansion.
inline Series pullback(const LocalExpansion& ex, const Vec4& h) {
  Series acc = ex.coords[0].scaled(h[0]);
  for (std::size_t i = 1; i < 4; ++i) acc = acc + ex.coords[i].scaled(h[i]);
  return acc;
}

inline std::size_t default_precision(const CurveParams& cp) { return 2 * cp.q() + 2; }

/// ord_P of the pulled-back hyperplane at fixed precision.
inline int ord_hyperplane(const CurveParams& cp, const CurvePoint& P, const Vec4& h, std::size_t precision) {
  if (!Hyperplane(h).contains(embed(cp, P))) throw Error(ErrorCode::NotOnHyperplane, "point not on hyperplane");
  const Series s = pullback(local_expansion(cp, P, precision), h);
  const std::size_t o = s.order();
  if (o >= precision) throw Error(ErrorCode::PrecisionExhausted, "order exceeds the series precision");
  return static_cast<int>(o);
}

/// Same, doubling the precision from 2q+2 up to 8q when exhausted.
inline int ord_hyperplane(const CurveParams& cp, const CurvePoint& P, const Vec4& h) {
  std::size_t n = default_precision(cp);
  const std::size_t cap = 8 * std::size_t(cp.q());
  while (true) {
    try {
      return ord_hyperplane(cp, P, h, n);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted || n >= cap) throw;
      n = std::min(2 * n, cap);
    }
  }
}

struct Intersection {
  CurvePoint point;
  int multiplicity;
};

/// Intersection multiplicity of a line at a point: min of the orders of its
/// two pencil generators.
inline int line_multiplicity(const CurveParams& cp, const Line3& l, const CurvePoint& P) {
  return std::min(ord_hyperplane(cp, P, l.h1()), ord_hyperplane(cp, P, l.h2()));
}

/// Intersection of a line with the curve. Simple intersection points beyond
/// the ambient field are only counted (`unresolved`, multiplicity 1 each).
struct LineIntersection {
  std::vector<Intersection> points;
  int unresolved = 0;
  int total_multiplicity() const {
    int t = unresolved;
    for (const auto& i : points) t += i.multiplicity;
    return t;
  }
};

/// Throws ExtensionBoundExceeded when a multiple intersection point lies
/// outside the ambient field.
inline LineIntersection line_curve_intersection(const CurveParams& cp, const Line3& l) {
  const auto& F = cp.ambient();
  if (&l.field() != &F) throw Error(ErrorCode::ContextMismatch, "line not over the ambient field");
  const auto [A, B] = l.span();
  std::array<Poly, 4> P{Poly(F), Poly(F), Poly(F), Poly(F)};
  for (std::size_t i = 0; i < 4; ++i) P[i] = Poly(F, std::vector<Fe>{A[i], B[i]});
  std::vector<CurvePoint> pts;
  int unresolved = 0;
  if (!P[2].is_zero()) {
    const Poly quad = P[0] * P[1] - P[2] * P[3];
    const Poly zq1 = detail::pow_poly(P[2], cp.q() - 1);
    const Poly cur = (detail::pow_poly(P[0], cp.q()) - P[0] * zq1) * (detail::pow_poly(P[1], cp.q()) - P[1] * zq1) -
                     detail::pow_poly(P[2], 2 * cp.q()).scaled(cp.c());
    if (quad.is_zero() && cur.is_zero()) throw Error(ErrorCode::InvalidArgument, "line contained in the curve");
    Poly G = quad.is_zero() ? cur.monic() : cur.is_zero() ? quad.monic() : gcd(quad, cur);
    if (P[2].degree() == 1) {
      while (G.degree() > 0) {
        auto [qt, rm] = divmod(G, P[2]);
        if (!rm.is_zero()) break;
        G = qt;
      }
    }
    if (G.degree() > 0) {
      const auto roots = poly_roots(G);
      Poly rest = G;
      for (const auto& r : roots)
        for (int m = 0; m < r.multiplicity; ++m) rest = rest / Poly::linear_root(r.value);
      if (rest.degree() > 0) {
        // simple on the quadric (or on the restricted curve, for a ruling line):
        // a transversal intersection, hence of multiplicity 1
        const Poly& host = quad.is_zero() ? rest : quad;
        const Poly d = rest.derivative(), dh = host.derivative();
        if (d.is_zero() || gcd(rest, d).degree() > 0 || dh.is_zero() || gcd(rest, dh).degree() > 0)
          throw Error(ErrorCode::ExtensionBoundExceeded, "multiple intersection point beyond the ambient field");
        unresolved = rest.degree();
      }
      for (const auto& r : roots) {
        Vec4 v;
        for (std::size_t i = 0; i < 4; ++i) v[i] = A[i] + r.value * B[i];
        CurvePoint C = CurvePoint::affine(v[0] / v[2], v[1] / v[2]);
        if (is_on_curve(cp, C)) pts.push_back(C);
      }
    }
    if (!B[2].is_zero()) {
      CurvePoint C = CurvePoint::affine(B[0] / B[2], B[1] / B[2]);
      if (on_quadric(ProjPoint3(B)) && is_on_curve(cp, C)) pts.push_back(C);
    }
  }
  for (const auto& C : infinite_points(cp))
    if (contains(l, embed(cp, C))) pts.push_back(C);
  std::sort(pts.begin(), pts.end());
  LineIntersection out;
  out.unresolved = unresolved;
  for (const auto& C : pts) out.points.push_back({C, line_multiplicity(cp, l, C)});
  return out;
}

/// Points of the smooth model mapped onto the line, with multiplicities.
/// Throws ExtensionBoundExceeded when some intersection point lies outside
/// the ambient field.
inline std::vector<Intersection> line_curve_intersections(const CurveParams& cp, const Line3& l) {
  auto r = line_curve_intersection(cp, l);
  if (r.unresolved) throw Error(ErrorCode::ExtensionBoundExceeded, "intersection points beyond the ambient field");
  return std::move(r.points);
}

/// Random affine curve points with coordinates in F_{q^k}.
template <class Rng>
std::vector<CurvePoint> sample_affine_points(const CurveParams& cp, std::uint32_t k, std::size_t count, Rng& rng) {
  if (k == 1) throw Error(ErrorCode::InvalidArgument, "the curve has no affine F_q-points");
  std::vector<CurvePoint> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 100 * count + 1000) throw Error(ErrorCode::InvalidArgument, "could not sample enough points");
    const Fe x = cp.random_new_element(rng, k);
    std::vector<Fe> ys;
    for (Fe y : artin_schreier_roots(cp, cp.c() / artin_schreier_value(cp, x)))
      if (cp.in_level(y, k)) ys.push_back(y);
    if (ys.empty()) continue;
    out.push_back(CurvePoint::affine(x, ys[rng() % ys.size()]));
  }
  return out;
}

}  // namespace asmgal
