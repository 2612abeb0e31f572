#pragma once

// Projection of the embedded curve from a line, its stabilizer in Aut(X),
// and the Galois verdict |stabilizer| == degree.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "asmgal/automorphism.hpp"
#include "asmgal/curve.hpp"
#include "asmgal/error.hpp"
#include "asmgal/projective.hpp"

namespace asmgal {

// ---------------------------------------------------------------------------
// Structural classes of lines

enum class LineTag { TypeAThroughCenter, TypeAAvoidingCenter, TypeB, TangentTypeB, NonGalois };

inline std::string to_string(LineTag t) {
  switch (t) {
    case LineTag::TypeAThroughCenter: return "type-a-through-center";
    case LineTag::TypeAAvoidingCenter: return "type-a-avoiding-center";
    case LineTag::TypeB: return "type-b";
    case LineTag::TangentTypeB: return "tangent-type-b";
    case LineTag::NonGalois: return "non-galois";
  }
  return "?";
}

/// Which concrete family a line belongs to, with its parameters.
enum class LineFamily {
  L1,              // Y = Z = 0
  L2,              // X = Z = 0
  CenterSlope,     // X - alpha Y = Z = 0, alpha != 0
  AvoidingCenter,  // Z = alpha X + beta Y + W = 0
  YRuling,         // W - a X = Y - a Z = 0
  XRuling,         // W - a Y = X - a Z = 0
  None,
};

struct LineClass {
  LineTag tag = LineTag::NonGalois;
  LineFamily family = LineFamily::None;
  std::optional<Fe> alpha, beta, a;
};


inline Line3 line_L1(const CurveParams& cp) {
  const Fe z = cp.zero(), o = cp.one();
  return Line3(Vec4{z, o, z, z}, Vec4{z, z, o, z});
}
inline Line3 line_L2(const CurveParams& cp) {
  const Fe z = cp.zero(), o = cp.one();
  return Line3(Vec4{o, z, z, z}, Vec4{z, z, o, z});
}
/// W - a X = Y - a Z = 0 (for a in F_q: the tangent line at P_a).
inline Line3 y_ruling(const CurveParams& cp, Fe a) {
  const Fe z = cp.zero(), o = cp.one();
  return Line3(Vec4{-a, z, z, o}, Vec4{z, o, -a, z});
}
/// W - a Y = X - a Z = 0 (for a in F_q: the tangent line at Q_a).
inline Line3 x_ruling(const CurveParams& cp, Fe a) {
  const Fe z = cp.zero(), o = cp.one();
  return Line3(Vec4{z, -a, z, o}, Vec4{o, z, -a, z});
}
/// X - alpha Y = Z = 0.
inline Line3 center_line(const CurveParams& cp, Fe alpha) {
  const Fe z = cp.zero(), o = cp.one();
  return Line3(Vec4{o, -alpha, z, z}, Vec4{z, z, o, z});
}
/// Z = alpha X + beta Y + W = 0.
inline Line3 avoiding_line(const CurveParams& cp, Fe alpha, Fe beta) {
  const Fe z = cp.zero(), o = cp.one();
  return Line3(Vec4{alpha, beta, z, o}, Vec4{z, z, o, z});
}

namespace detail {
// A pencil member lambda H1 + mu H2 whose coefficients i and j vanish, if any.
inline std::optional<Vec4> member_with_zeros(const Line3& l, std::size_t i, std::size_t j) {
  const Vec4 &h1 = l.h1(), &h2 = l.h2();
  const Fe a11 = h1[i], a12 = h2[i], a21 = h1[j], a22 = h2[j];
  if (!(a11 * a22 - a12 * a21).is_zero()) return std::nullopt;
  Fe lam = a12, mu = -a11;
  if (lam.is_zero() && mu.is_zero()) {
    lam = a22;
    mu = -a21;
  }
  if (lam.is_zero() && mu.is_zero()) {
    lam = Fe::one(a11.field());
    mu = Fe::zero(a11.field());
  }
  Vec4 m;
  for (std::size_t k = 0; k < 4; ++k) m[k] = lam * h1[k] + mu * h2[k];
  return m;
}
}  // namespace detail

/// Pattern-match a line against the two Galois families.
inline LineClass classify_line(const CurveParams& cp, const Line3& l) {
  const Fe z = cp.zero(), o = cp.one();
  const Hyperplane plane(Vec4{z, z, o, z});
  LineClass out;
  if (contains(plane, l) && is_fq_line(l, cp.q())) {
    if (contains(l, ProjPoint3(Vec4{z, z, z, o}))) {
      out.tag = LineTag::TypeAThroughCenter;
      if (l == line_L1(cp)) {
        out.family = LineFamily::L1;
      } else if (l == line_L2(cp)) {
        out.family = LineFamily::L2;
      } else {
        for (Fe al : cp.fq())
          if (!al.is_zero() && l == center_line(cp, al)) {
            out.family = LineFamily::CenterSlope;
            out.alpha = al;
          }
      }
    } else {
      out.tag = LineTag::TypeAAvoidingCenter;
      out.family = LineFamily::AvoidingCenter;
      for (Fe al : cp.fq())
        for (Fe be : cp.fq())
          if (l == avoiding_line(cp, al, be)) {
            out.alpha = al;
            out.beta = be;
          }
    }
    return out;
  }
  if (auto m = detail::member_with_zeros(l, 0, 3); m && !(*m)[1].is_zero()) {
    const Fe a = -(*m)[2] / (*m)[1];
    if (l == y_ruling(cp, a)) {
      out.tag = cp.in_fq(a) ? LineTag::TangentTypeB : LineTag::TypeB;
      out.family = LineFamily::YRuling;
      out.a = a;
      return out;
    }
  }
  if (auto m = detail::member_with_zeros(l, 1, 3); m && !(*m)[0].is_zero()) {
    const Fe a = -(*m)[2] / (*m)[0];
    if (l == x_ruling(cp, a)) {
      out.tag = cp.in_fq(a) ? LineTag::TangentTypeB : LineTag::TypeB;
      out.family = LineFamily::XRuling;
      out.a = a;
      return out;
    }
  }
  return out;
}

/// Generators of the Galois group predicted for each family.
inline std::vector<AutElement> expected_generators(const CurveParams& cp, const LineClass& cls) {
  std::vector<AutElement> gens;
  const Fe z = cp.zero(), o = cp.one();
  switch (cls.family) {
    case LineFamily::L2:
    case LineFamily::YRuling:
      for (Fe b : fq_basis(cp)) gens.push_back(AutElement::translation(cp, z, b));
      return gens;
    case LineFamily::L1:
    case LineFamily::XRuling:
      for (Fe b : fq_basis(cp)) gens.push_back(AutElement::translation(cp, b, z));
      return gens;
    case LineFamily::CenterSlope: {
      // t = x - alpha y is fixed by (x + alpha b, y + b) and by (x, y) -> (-alpha y, -x / alpha)
      const Fe al = *cls.alpha;
      for (Fe b : fq_basis(cp)) gens.push_back(AutElement::translation(cp, al * b, b));
      gens.push_back({-al, z, z, true});
      return gens;
    }
    case LineFamily::AvoidingCenter: {
      // (x + beta)(y + alpha) is fixed by scalings about (-beta, -alpha) and by the swap there
      const Fe al = *cls.alpha, be = *cls.beta, g = fq_primitive(cp);
      gens.push_back({g, (g - o) * be, (g.inv() - o) * al, false});
      gens.push_back({o, al - be, be - al, true});
      return gens;
    }
    case LineFamily::None: break;
  }
  throw Error(ErrorCode::UnknownClass, "line is not in a Galois family");
}

// ---------------------------------------------------------------------------
// Projection and analysis

using P1Point = std::array<Fe, 2>;

inline P1Point normalize_p1(P1Point v) {
  if (!v[0].is_zero()) return {Fe::one(v[0].field()), v[1] / v[0]};
  if (!v[1].is_zero()) return {v[0], Fe::one(v[1].field())};
  throw Error(ErrorCode::InvalidArgument, "(0:0) is not a point of P^1");
}

struct FiberPoint {
  CurvePoint point;
  int ramification_index;
};

struct Fiber {
  P1Point base;
  std::vector<FiberPoint> points;
  bool complete = false;
};

struct FiberCheck {
  Fiber fiber;
  bool uniform = true;
  bool transitive = true;
  bool point_stabilizer_matches = true;
};

struct RamificationReport {
  std::vector<FiberCheck> fibers;
  bool consistent = true;
  std::vector<Fiber> certificates;  // mixed-index fibers witnessing non-Galois lines
};

struct GaloisAnalysis {
  Line3 line;
  int degree = 0;
  std::vector<Intersection> intersections;
  int unresolved_intersections = 0;  // simple points beyond the ambient field
  Subgroup stabilizer;
  bool is_galois = false;
  GroupType group_type;
  LineClass classification;
  std::vector<Fiber> certificates;
};

/// Shared, immutable state for analysing lines of one curve.
class GaloisAnalyzer {
 public:
  explicit GaloisAnalyzer(CurveParams cp) : cp_(std::move(cp)), aut_(enumerate_aut(cp_)) {
    std::mt19937_64 rng(0x5eed);
    // F_{q^3} when the curve has enough points there, else the ambient field.
    // A line holds at most q curve points, so more than 3q affine points leave
    // over 4q usable ones, which two maps of degree <= 2q cannot share by accident.
    const std::size_t want = 8 * cp_.q();
    sample_level_ = cp_.ambient_degree();
    if (cp_.ambient_degree() % 3 == 0) {
      auto pts = affine_points(3);
      if (pts.size() > 3 * cp_.q()) {
        sample_level_ = 3;
        if (pts.size() <= want) sample_ = std::move(pts);
      }
    }
    if (sample_.empty()) sample_ = sample_affine_points(cp_, sample_level_, want, rng);
    for (const auto& P : infinite_points(cp_)) sample_.push_back(P);
    std::sort(sample_.begin(), sample_.end());
    sample_.erase(std::unique(sample_.begin(), sample_.end()), sample_.end());
    verify_unique_quadric();
  }

  const CurveParams& params() const noexcept { return cp_; }
  const Subgroup& aut() const noexcept { return aut_; }
  const std::vector<CurvePoint>& sample_points() const noexcept { return sample_; }
  std::uint32_t sample_level() const noexcept { return sample_level_; }

  /// Exact test of pi o s == pi: the quadratic form H1(Mv) H2(v) - H2(Mv) H1(v)
  /// must be a multiple of XY - ZW.
  bool commutes(const AutElement& s, const Line3& l) const {
    const Mat4 m = to_matrix(cp_, s);
    const Vec4 u1 = row_times(l.h1(), m), u2 = row_times(l.h2(), m);
    // coefficient of v_i v_j in (u1.v)(h2.v) - (u2.v)(h1.v)
    auto coef = [&](std::size_t i, std::size_t j) {
      Fe c = u1[i] * l.h2()[j] - u2[i] * l.h1()[j];
      if (i != j) c += u1[j] * l.h2()[i] - u2[j] * l.h1()[i];
      return c;
    };
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) {
        if ((i == 0 && j == 1) || (i == 2 && j == 3)) continue;
        if (!coef(i, j).is_zero()) return false;
      }
    return (coef(0, 1) + coef(2, 3)).is_zero();
  }

  /// Cross-check by evaluating pi(s P) and pi(P) on sample points off the line.
  /// nullopt when fewer than 4q + 1 usable points were available.
  std::optional<bool> commutes_pointwise(const AutElement& s, const Line3& l) const {
    std::size_t usable = 0;
    for (const auto& P : sample_) {
      const Vec4 v = embed(cp_, P).coords();
      const Vec4 w = embed(cp_, act_on_point(s, P)).coords();
      const P1Point a{detail::dot(l.h1(), v), detail::dot(l.h2(), v)};
      const P1Point b{detail::dot(l.h1(), w), detail::dot(l.h2(), w)};
      if ((a[0].is_zero() && a[1].is_zero()) || (b[0].is_zero() && b[1].is_zero())) continue;
      ++usable;
      if (!(a[0] * b[1] - a[1] * b[0]).is_zero()) return false;
    }
    if (usable <= 4 * std::size_t(cp_.q())) return std::nullopt;
    return true;
  }

  Subgroup stabilizer(const Line3& l) const {
    std::vector<AutElement> els;
    for (const auto& s : aut_.elements())
      if (commutes(s, l)) els.push_back(s);
    return Subgroup(std::move(els), {});
  }

  /// deg pi = 2q - sum of intersection multiplicities.
  std::pair<int, LineIntersection> projection_degree(const Line3& l) const {
    auto inter = line_curve_intersection(cp_, l);
    const int deg = 2 * int(cp_.q()) - inter.total_multiplicity();
    return {deg, std::move(inter)};
  }

  GaloisAnalysis analyze(const Line3& l) const {
    auto [deg, inter] = projection_degree(l);
    Subgroup stab = stabilizer(l);
    GaloisAnalysis out{l, deg, std::move(inter.points), inter.unresolved, stab, false, {}, classify_line(cp_, l), {}};
    out.is_galois = int(stab.order()) == deg;
    out.group_type = group_type(stab, cp_);
    return out;
  }

  /// pi at a curve point, extended across the base points on the line.
  P1Point project(const Line3& l, const CurvePoint& P) const {
    const Vec4 v = embed(cp_, P).coords();
    const Fe a = detail::dot(l.h1(), v), b = detail::dot(l.h2(), v);
    if (!a.is_zero() || !b.is_zero()) return normalize_p1({a, b});
    auto [s1, s2, m] = pencil_series(l, P);
    return normalize_p1({s1[m], s2[m]});
  }

  /// ord_P of the pulled-back local coordinate at pi(P).
  int ramification_index(const Line3& l, const CurvePoint& P, const P1Point& base) const {
    Vec4 h;
    for (std::size_t i = 0; i < 4; ++i) h[i] = base[1] * l.h1()[i] - base[0] * l.h2()[i];
    const Vec4 v = embed(cp_, P).coords();
    if (!(detail::dot(l.h1(), v).is_zero() && detail::dot(l.h2(), v).is_zero()))
      return ord_hyperplane(cp_, P, h);
    auto [s1, s2, m] = pencil_series(l, P);
    (void)s1;
    (void)s2;
    return ord_hyperplane(cp_, P, h) - int(m);
  }

  /// Points over the ambient field with pi(P) = base; `complete` when the
  /// indices add up to the degree.
  Fiber fiber_points(const Line3& l, const P1Point& base_in, int degree) const {
    const P1Point base = normalize_p1(base_in);
    Vec4 h;
    for (std::size_t i = 0; i < 4; ++i) h[i] = base[1] * l.h1()[i] - base[0] * l.h2()[i];
    Fiber f{base, {}, false};
    const Section sec = hyperplane_section(cp_, h);
    int total = 0;
    for (const auto& P : sec.points) {
      if (!(project(l, P) == base)) continue;
      const int e = ramification_index(l, P, base);
      f.points.push_back({P, e});
      total += e;
    }
    f.complete = total == degree;
    return f;
  }

  /// The fiber restricted to F_{q^k}; throws if it is not all visible there.
  std::vector<FiberPoint> fiber(const Line3& l, const P1Point& base, std::uint32_t k) const {
    const int deg = projection_degree(l).first;
    Fiber f = fiber_points(l, base, deg);
    std::vector<FiberPoint> out;
    int total = 0;
    for (const auto& fp : f.points) {
      const auto& P = fp.point;
      if (P.is_affine() && !(cp_.in_level(P.x, k) && cp_.in_level(P.y, k))) continue;
      out.push_back(fp);
      total += fp.ramification_index;
    }
    if (total != deg)
      throw Error(ErrorCode::BaseOnBranchTooSmallField,
                  "fiber has " + std::to_string(total) + " of " + std::to_string(deg) + " points over this field");
    return out;
  }

  /// Fiber-level checks: equal indices, transitive stabilizer action, and
  /// point-stabilizer order equal to the index. Mixed-index complete fibers
  /// become certificates of non-Galois lines.
  RamificationReport ramification_consistency(const Line3& l, const std::vector<P1Point>& bases) const {
    const auto an = analyze(l);
    RamificationReport rep;
    for (const auto& b : bases) {
      FiberCheck fc{fiber_points(l, b, an.degree)};
      if (!fc.fiber.complete) continue;
      check_fiber(an, fc);
      if (an.is_galois && !(fc.uniform && fc.transitive && fc.point_stabilizer_matches)) rep.consistent = false;
      if (!an.is_galois && !fc.uniform) rep.certificates.push_back(fc.fiber);
      rep.fibers.push_back(std::move(fc));
    }
    return rep;
  }

  void check_fiber(const GaloisAnalysis& an, FiberCheck& fc) const {
    const auto& pts = fc.fiber.points;
    if (pts.empty()) return;
    for (const auto& fp : pts)
      if (fp.ramification_index != pts.front().ramification_index) fc.uniform = false;
    std::set<CurvePoint> fiber_set, orbit;
    for (const auto& fp : pts) fiber_set.insert(fp.point);
    for (const auto& s : an.stabilizer.elements()) orbit.insert(act_on_point(s, pts.front().point));
    fc.transitive = orbit == fiber_set;
    for (const auto& fp : pts) {
      int fixed = 0;
      for (const auto& s : an.stabilizer.elements())
        if (act_on_point(s, fp.point) == fp.point) ++fixed;
      if (fixed != fp.ramification_index) fc.point_stabilizer_matches = false;
    }
  }

  /// Complete fibers with unequal ramification indices, up to `limit` of them.
  std::vector<Fiber> mixed_fibers(const Line3& l, int degree, const std::vector<P1Point>& bases,
                                  std::size_t limit = 1) const {
    std::vector<Fiber> out;
    for (const auto& b : bases) {
      if (out.size() >= limit) break;
      Fiber f = fiber_points(l, b, degree);
      if (!f.complete) continue;
      const bool mixed = std::any_of(f.points.begin(), f.points.end(), [&](const FiberPoint& p) {
        return p.ramification_index != f.points.front().ramification_index;
      });
      if (mixed) out.push_back(std::move(f));
    }
    return out;
  }

  /// The q + 1 points of P^1(F_q).
  std::vector<P1Point> rational_bases() const {
    std::vector<P1Point> out{{cp_.one(), cp_.zero()}};
    for (Fe v : cp_.fq()) out.push_back({v, cp_.one()});
    return out;
  }

  /// Complete fibers over bases drawn first from P^1(F_q), then at random from
  /// the larger subfields in turn, until `wanted` are found or the attempt budget runs out.
  template <class Rng>
  std::vector<Fiber> complete_fibers(const Line3& l, int degree, std::size_t wanted, Rng& rng,
                                     std::size_t budget = 400) const {
    std::vector<Fiber> out;
    std::set<std::pair<std::uint32_t, std::uint32_t>> tried;
    auto attempt = [&](const P1Point& b) {
      const P1Point nb = normalize_p1(b);
      if (!tried.insert({nb[0].code(), nb[1].code()}).second) return;
      Fiber f = fiber_points(l, nb, degree);
      if (f.complete) out.push_back(std::move(f));
    };
    attempt({cp_.one(), cp_.zero()});
    for (Fe v : cp_.fq()) {
      if (out.size() >= wanted) return out;
      attempt({v, cp_.one()});
    }
    std::vector<std::uint32_t> levels;
    for (std::uint32_t k : cp_.levels())
      if (k > 1) levels.push_back(k);
    for (std::size_t i = 0; i < budget && out.size() < wanted; ++i) {
      const std::uint32_t k = levels[i % levels.size()];
      attempt({cp_.random_element(rng, k), cp_.one()});
    }
    return out;
  }

 private:
  static Vec4 row_times(const Vec4& h, const Mat4& m) {
    Vec4 out;
    for (std::size_t j = 0; j < 4; ++j) {
      Fe acc = h[0] * m[0][j];
      for (std::size_t i = 1; i < 4; ++i) acc += h[i] * m[i][j];
      out[j] = acc;
    }
    return out;
  }

  // Pulled-back pencil generators at P and the smaller of their orders.
  std::tuple<Series, Series, std::size_t> pencil_series(const Line3& l, const CurvePoint& P) const {
    std::size_t n = default_precision(cp_);
    while (true) {
      const auto ex = local_expansion(cp_, P, n);
      Series s1 = pullback(ex, l.h1()), s2 = pullback(ex, l.h2());
      const std::size_t m = std::min(s1.order(), s2.order());
      if (m < n) return {std::move(s1), std::move(s2), m};
      if (n >= 8 * cp_.q()) throw Error(ErrorCode::PrecisionExhausted, "pencil vanishes to the precision cap");
      n = std::min<std::size_t>(2 * n, 8 * cp_.q());
    }
  }

  // The quadrics through the embedded curve form a 1-dimensional space spanned by XY - ZW.
  void verify_unique_quadric() const {
    std::vector<std::vector<Fe>> rows;
    for (const auto& P : sample_) {
      const Vec4 v = embed(cp_, P).coords();
      std::vector<Fe> r;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) r.push_back(v[i] * v[j]);
      rows.push_back(std::move(r));
    }
    if (rank(rows) != 9) throw Error(ErrorCode::InvalidArgument, "embedded curve lies on more than one quadric");
  }

  static std::size_t rank(std::vector<std::vector<Fe>> rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
      std::size_t piv = r;
      while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[r], rows[piv]);
      const Fe inv = rows[r][c].inv();
      for (auto& x : rows[r]) x = x * inv;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r || rows[i][c].is_zero()) continue;
        const Fe m = rows[i][c];
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] = rows[i][j] - m * rows[r][j];
      }
      ++r;
    }
    return r;
  }

  std::vector<CurvePoint> affine_points(std::uint32_t k) const {
    std::vector<CurvePoint> out;
    for (Fe x : cp_.subfield(k)) {
      if (cp_.in_fq(x)) continue;
      for (Fe y : artin_schreier_roots(cp_, cp_.c() / artin_schreier_value(cp_, x)))
        if (cp_.in_level(y, k)) out.push_back(CurvePoint::affine(x, y));
    }
    return out;
  }

  CurveParams cp_;
  Subgroup aut_;
  std::vector<CurvePoint> sample_;
  std::uint32_t sample_level_ = 3;
};

}  // namespace asmgal
