#pragma once

// Classification driver: the F_q-lines of {Z = 0}, the ruling families,
// negative scans, the collinearity check on {Y = aZ}, and property suites.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "asmgal/galois.hpp"
#include "asmgal/parallel.hpp"

namespace asmgal {

// ---------------------------------------------------------------------------
// Plane lines

struct PlaneRow {
  GaloisAnalysis analysis;
  bool generators_match = false;  // expected generators span the stabilizer
};

struct PlaneClassification {
  std::vector<PlaneRow> rows;
  std::size_t n_fq_semi_c2 = 0, n_fq_star_semi_c2 = 0, n_fq = 0, n_other = 0;
  bool all_galois = true;
  bool all_generators_match = true;

  std::size_t total() const { return rows.size(); }
  bool matches(std::uint32_t q) const {
    return all_galois && n_fq_semi_c2 == q - 1 && n_fq_star_semi_c2 == std::size_t(q) * q && n_fq == 2 &&
           n_other == 0 && total() == std::size_t(q) * q + q + 1;
  }
};

/// Analyze every F_q-line of {Z = 0}. With `strict`, a tally that differs
/// from (q - 1, q^2, 2) throws CountMismatch.
inline PlaneClassification classify_plane_lines(const GaloisAnalyzer& an, bool strict = true) {
  const auto& cp = an.params();
  const auto lines = enumerate_plane_fq_lines(cp.fq());
  PlaneClassification out;
  out.rows = parallel_map<PlaneRow>(lines.size(), [&](std::size_t i) {
    PlaneRow row{an.analyze(lines[i])};
    const auto& cls = row.analysis.classification;
    if (cls.family != LineFamily::None)
      row.generators_match = Subgroup::generated_by(cp, expected_generators(cp, cls)) == row.analysis.stabilizer;
    return row;
  });
  for (const auto& r : out.rows) {
    const auto& a = r.analysis;
    out.all_galois = out.all_galois && a.is_galois;
    out.all_generators_match = out.all_generators_match && r.generators_match;
    switch (a.group_type.tag) {
      case GroupTag::FqSemiC2: ++out.n_fq_semi_c2; break;
      case GroupTag::FqStarSemiC2: ++out.n_fq_star_semi_c2; break;
      case GroupTag::Fq: ++out.n_fq; break;
      default: ++out.n_other; break;
    }
  }
  if (strict && !out.matches(cp.q()))
    throw Error(ErrorCode::CountMismatch,
                "counts " + std::to_string(out.n_fq_semi_c2) + " + " + std::to_string(out.n_fq_star_semi_c2) + " + " +
                    std::to_string(out.n_fq) + " (other " + std::to_string(out.n_other) + ") for q = " +
                    std::to_string(cp.q()));
  return out;
}

// ---------------------------------------------------------------------------
// Ruling families W - aX = Y - aZ = 0 and W - aY = X - aZ = 0

struct TypeBRow {
  Fe a;
  std::uint32_t level = 1;
  LineFamily family = LineFamily::YRuling;
  GaloisAnalysis analysis;
  bool same_group_as_axis = false;  // G = G_{L2} (y-ruling) or G_{L1} (x-ruling)
  bool intersection_ok = false;     // tangent at P_a / Q_a, or q transversal points
  bool ok() const {
    return analysis.is_galois && analysis.degree == int(analysis.stabilizer.order()) &&
           analysis.group_type.tag == GroupTag::Fq && same_group_as_axis && intersection_ok;
  }
};

struct TypeBScan {
  std::vector<TypeBRow> rows;
  std::vector<Fe> skipped;  // parameters whose intersection left the ambient field
  bool all_ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const TypeBRow& r) { return r.ok(); });
  }
};

struct TypeBPlan {
  std::size_t from_fq = 6, from_q2 = 8, from_q3 = 8;
  std::size_t min_total = 24;  // topped up from the ambient field when the small levels run dry
  std::size_t budget = 400;    // draws allowed per level before giving up
};

namespace detail {
inline bool type_b_intersection_ok(const CurveParams& cp, const TypeBRow& r) {
  const auto& in = r.analysis.intersections;
  if (cp.in_fq(r.a)) {
    const CurvePoint tangent =
        r.family == LineFamily::YRuling ? CurvePoint::pole_of_x(r.a) : CurvePoint::pole_of_y(r.a);
    return in.size() == 1 && in[0].point == tangent && in[0].multiplicity == int(cp.q());
  }
  if (in.size() + r.analysis.unresolved_intersections != cp.q()) return false;
  return std::all_of(in.begin(), in.end(), [](const Intersection& i) { return i.multiplicity == 1; });
}
}  // namespace detail

/// Both ruling lines for each given a.
inline TypeBScan scan_type_b(const GaloisAnalyzer& an, const std::vector<Fe>& as) {
  const auto& cp = an.params();
  const Subgroup g1 = an.stabilizer(line_L1(cp)), g2 = an.stabilizer(line_L2(cp));
  struct Slot {
    std::vector<TypeBRow> rows;
    bool skipped = false;
  };
  auto slots = parallel_map<Slot>(as.size(), [&](std::size_t i) {
    Slot s;
    const Fe a = as[i];
    try {
      for (LineFamily fam : {LineFamily::YRuling, LineFamily::XRuling}) {
        const Line3 l = fam == LineFamily::YRuling ? y_ruling(cp, a) : x_ruling(cp, a);
        TypeBRow row{a, cp.level(a), fam, an.analyze(l)};
        row.same_group_as_axis = row.analysis.stabilizer == (fam == LineFamily::YRuling ? g2 : g1);
        row.intersection_ok = detail::type_b_intersection_ok(cp, row);
        s.rows.push_back(std::move(row));
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ExtensionBoundExceeded) throw;
      s.rows.clear();
      s.skipped = true;
    }
    return s;
  });
  TypeBScan out;
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (slots[i].skipped) out.skipped.push_back(as[i]);
    for (auto& r : slots[i].rows) out.rows.push_back(std::move(r));
  }
  return out;
}

namespace detail {
template <class Rng>
std::vector<Fe> some_fq(const CurveParams& cp, Rng& rng, std::size_t n) {
  std::vector<Fe> fq = cp.fq();
  std::shuffle(fq.begin(), fq.end(), rng);
  fq.resize(std::min(n, fq.size()));
  std::sort(fq.begin(), fq.end());
  return fq;
}

// (level, wanted) pairs: F_{q^2}, F_{q^3}, then the ambient field for the rest.
inline std::vector<std::pair<std::uint32_t, std::size_t>> sample_levels(const CurveParams& cp, std::size_t n2,
                                                                        std::size_t n3) {
  std::vector<std::pair<std::uint32_t, std::size_t>> out;
  for (auto [k, n] : {std::pair<std::uint32_t, std::size_t>{2, n2}, {3, n3}})
    if (cp.ambient_degree() % k == 0) out.emplace_back(k, n);
  return out;
}
}  // namespace detail

/// Parameters for the ruling scan: distinct elements of F_q, F_{q^2} \ F_q and
/// F_{q^3} \ F_q, topped up from the ambient field up to `min_total`. Draws
/// whose intersection leaves the ambient field are recorded and replaced.
template <class Rng>
TypeBScan sample_type_b(const GaloisAnalyzer& an, Rng& rng, const TypeBPlan& plan = {}) {
  const auto& cp = an.params();
  TypeBScan out = scan_type_b(an, detail::some_fq(cp, rng, plan.from_fq));
  std::set<Fe> seen;
  auto distinct = [&] { return out.rows.size() / 2; };
  auto levels = detail::sample_levels(cp, plan.from_q2, plan.from_q3);
  levels.emplace_back(cp.ambient_degree(), 0);
  for (auto [k, want] : levels) {
    if (k == cp.ambient_degree() && distinct() < plan.min_total) want = plan.min_total - distinct();
    std::size_t got = 0;
    for (std::size_t draw = 0; got < want && draw < plan.budget;) {
      std::vector<Fe> batch;
      while (batch.size() < want - got && draw < plan.budget) {
        ++draw;
        const Fe a = cp.random_new_element(rng, k);
        if (seen.insert(a).second) batch.push_back(a);
      }
      TypeBScan part = scan_type_b(an, batch);
      got += batch.size() - part.skipped.size();
      for (auto& r : part.rows) out.rows.push_back(std::move(r));
      for (auto& s : part.skipped) out.skipped.push_back(s);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Negative scan

enum class NegativeStrategy { Secant, ThroughPoint, Disjoint, PlaneExtension };

inline std::string to_string(NegativeStrategy s) {
  switch (s) {
    case NegativeStrategy::Secant: return "secant";
    case NegativeStrategy::ThroughPoint: return "through-point";
    case NegativeStrategy::Disjoint: return "disjoint";
    case NegativeStrategy::PlaneExtension: return "plane-extension";
  }
  return "?";
}

struct NegativeRow {
  NegativeStrategy strategy;
  GaloisAnalysis analysis;
};

struct NegativeScan {
  std::vector<NegativeRow> rows;
  std::vector<Line3> false_positives;
  std::size_t skipped = 0;           // intersections beyond the ambient field
  std::size_t single_point = 0;      // lines meeting the curve once, transversally
  bool single_point_ok = true;       // those all have degree 2q - 1 and are not Galois
};

namespace detail {
template <class Rng>
Vec4 random_vec(const CurveParams& cp, Rng& rng, std::uint32_t k) {
  while (true) {
    Vec4 v{cp.random_element(rng, k), cp.random_element(rng, k), cp.random_element(rng, k),
           cp.random_element(rng, k)};
    if (!std::all_of(v.begin(), v.end(), [](Fe x) { return x.is_zero(); })) return v;
  }
}

template <class Rng>
std::optional<Line3> negative_candidate(const CurveParams& cp, NegativeStrategy s, Rng& rng) {
  const Fe z = cp.zero(), o = cp.one();
  switch (s) {
    case NegativeStrategy::Secant: {
      const auto pts = sample_affine_points(cp, 2, 2, rng);
      const ProjPoint3 a = embed(cp, pts[0]), b = embed(cp, pts[1]);
      if (a == b) return std::nullopt;
      return line_through(a, b);
    }
    case NegativeStrategy::ThroughPoint: {
      const ProjPoint3 a = embed(cp, sample_affine_points(cp, 2, 1, rng)[0]);
      const ProjPoint3 b(random_vec(cp, rng, 2));
      if (a == b) return std::nullopt;
      return line_through(a, b);
    }
    case NegativeStrategy::Disjoint: {
      const std::uint32_t k = rng() % 2 ? 1 : 3;
      const Vec4 h1 = random_vec(cp, rng, k), h2 = random_vec(cp, rng, k);
      if (detail::rref({h1, h2}).size() < 2) return std::nullopt;
      const Line3 l(h1, h2);
      if (contains(Hyperplane(Vec4{z, z, o, z}), l)) return std::nullopt;
      if (line_curve_intersection(cp, l).total_multiplicity() != 0) return std::nullopt;
      return l;
    }
    case NegativeStrategy::PlaneExtension: {
      const Vec4 h{cp.random_element(rng, 2), cp.random_element(rng, 2), z, cp.random_element(rng, 2)};
      if (h[0].is_zero() && h[1].is_zero() && h[3].is_zero()) return std::nullopt;
      const Line3 l(Vec4{z, z, o, z}, h);
      if (is_fq_line(l, cp.q())) return std::nullopt;
      return l;
    }
  }
  return std::nullopt;
}
}  // namespace detail

/// `count` distinct seeded lines outside both Galois families, cycling through
/// the four strategies. With `strict`, any Galois verdict throws FalsePositive.
inline NegativeScan negative_scan(const GaloisAnalyzer& an, std::size_t count, std::uint64_t seed,
                                  bool strict = true) {
  const auto& cp = an.params();
  std::mt19937_64 rng(seed);
  std::vector<std::pair<NegativeStrategy, Line3>> lines;
  std::set<Line3> seen;
  const NegativeStrategy order[] = {NegativeStrategy::Secant, NegativeStrategy::ThroughPoint,
                                    NegativeStrategy::Disjoint, NegativeStrategy::PlaneExtension};
  std::size_t skipped = 0;
  for (std::size_t draw = 0; lines.size() < count && draw < 50 * count; ++draw) {
    const NegativeStrategy s = order[draw % 4];
    std::optional<Line3> l;
    try {
      l = detail::negative_candidate(cp, s, rng);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ExtensionBoundExceeded) throw;
      ++skipped;
    }
    if (!l || classify_line(cp, *l).tag != LineTag::NonGalois || !seen.insert(*l).second) continue;
    lines.emplace_back(s, *l);
  }
  auto analyses = parallel_map<std::optional<GaloisAnalysis>>(lines.size(), [&](std::size_t i) {
    try {
      auto a = an.analyze(lines[i].second);
      if (!a.is_galois) a.certificates = an.mixed_fibers(a.line, a.degree, an.rational_bases());
      return std::optional<GaloisAnalysis>(std::move(a));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ExtensionBoundExceeded) throw;
      return std::optional<GaloisAnalysis>();
    }
  });
  NegativeScan out;
  out.skipped = skipped;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!analyses[i]) {
      ++out.skipped;
      continue;
    }
    const auto& a = *analyses[i];
    if (a.is_galois) out.false_positives.push_back(a.line);
    const bool one_point = a.intersections.size() == 1 ? a.intersections[0].multiplicity == 1 && a.unresolved_intersections == 0
                                                         : a.intersections.empty() && a.unresolved_intersections == 1;
    if (one_point) {
      ++out.single_point;
      if (a.degree != 2 * int(cp.q()) - 1 || a.is_galois) out.single_point_ok = false;
    }
    out.rows.push_back({lines[i].first, std::move(*analyses[i])});
  }
  std::sort(out.rows.begin(), out.rows.end(),
            [](const NegativeRow& x, const NegativeRow& y) { return x.analysis.line < y.analysis.line; });
  if (strict && !out.false_positives.empty())
    throw Error(ErrorCode::FalsePositive, std::to_string(out.false_positives.size()) +
                                              " line(s) outside the Galois families tested Galois");
  return out;
}

// ---------------------------------------------------------------------------
// Sections by {Y - aZ = 0}

struct SectionRow {
  Fe a;
  std::uint32_t level = 1;
  bool in_fq = false;
  std::vector<CurvePoint> off_omega1;  // section points outside the poles of x
  bool ok = false;
};

struct SectionCollinearity {
  std::vector<SectionRow> rows;
  std::vector<Fe> skipped;  // incomplete sections over the ambient field
  bool all_ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const SectionRow& r) { return r.ok; });
  }
};

/// a in F_q: {Y = aZ} contains the tangent line at P_a. Otherwise the section
/// points off the poles of x are q points on {W - aX = Y - aZ = 0}.
inline SectionRow section_row(const CurveParams& cp, Fe a, const Section& sec) {
  SectionRow r{a, cp.level(a), cp.in_fq(a), {}, false};
  const Fe z = cp.zero(), o = cp.one();
  const Hyperplane H(Vec4{z, o, -a, z});
  const Line3 target = y_ruling(cp, a);
  for (const auto& P : sec.points)
    if (P.kind != CurvePoint::Kind::P) r.off_omega1.push_back(P);
  if (r.in_fq) {
    const auto span = target.span();
    const bool inside = H.eval(span[0]).is_zero() && H.eval(span[1]).is_zero();
    const CurvePoint Pa = CurvePoint::pole_of_x(a);
    r.ok = inside && contains(target, embed(cp, Pa)) && line_multiplicity(cp, target, Pa) >= 2;
  } else {
    r.ok = r.off_omega1.size() == cp.q() &&
           std::all_of(r.off_omega1.begin(), r.off_omega1.end(),
                       [&](const CurvePoint& P) { return contains(target, embed(cp, P)); });
  }
  return r;
}

template <class Rng>
SectionCollinearity section_collinearity_check(const CurveParams& cp, Rng& rng, std::size_t per_level = 10, std::size_t min_total = 36,
                           std::size_t budget = 400) {
  SectionCollinearity out;
  const Fe z = cp.zero(), o = cp.one();
  auto run = [&](Fe a) {
    const Section sec = hyperplane_section(cp, Vec4{z, o, -a, z});
    if (!sec.complete) {
      out.skipped.push_back(a);
      return false;
    }
    out.rows.push_back(section_row(cp, a, sec));
    return true;
  };
  for (Fe a : detail::some_fq(cp, rng, per_level)) run(a);
  std::set<Fe> seen;
  auto levels = detail::sample_levels(cp, per_level, per_level);
  levels.emplace_back(cp.ambient_degree(), 0);
  for (auto [k, want] : levels) {
    if (k == cp.ambient_degree() && out.rows.size() < min_total) want = min_total - out.rows.size();
    std::size_t got = 0;
    for (std::size_t draw = 0; got < want && draw < budget; ++draw) {
      const Fe a = cp.random_new_element(rng, k);
      if (seen.insert(a).second && run(a)) ++got;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Property suites

struct AutCheck {
  std::size_t order = 0, expected = 0;
  bool closed = false;
  bool faithful = false;
  bool generated = false;  // the listed generators span the whole group
  bool ok() const { return order == expected && closed && faithful && generated; }
};

/// Order, closure and faithfulness of the action on the 2q points at infinity.
inline AutCheck aut_check(const GaloisAnalyzer& an) {
  const auto& cp = an.params();
  const auto& G = an.aut();
  AutCheck out;
  out.order = G.order();
  out.expected = 2 * std::size_t(cp.q()) * cp.q() * (cp.q() - 1);
  out.closed = true;  // Subgroup construction verified closure
  const auto inf = infinite_points(cp);
  std::set<std::vector<CurvePoint>> perms;
  for (const auto& s : G.elements()) {
    std::vector<CurvePoint> img;
    for (const auto& P : inf) img.push_back(act_on_point(s, P));
    perms.insert(std::move(img));
  }
  out.faithful = perms.size() == G.order();
  out.generated = Subgroup::generated_by(cp, G.generators()) == G;
  return out;
}

struct PoleOrderCheck {
  std::size_t checked = 0;
  std::map<int, std::size_t> histogram;  // order -> count
  std::vector<std::pair<CurvePoint, Vec4>> violations;
  bool ok(std::uint32_t q) const {
    if (!violations.empty() || checked == 0) return false;
    for (const auto& [o, n] : histogram)
      if (o != 1 && o != int(q) && o != int(q) + 1) return false;
    return true;
  }
};

/// ord_P of hyperplanes through phi(P) for every P at infinity: all F_q-rational
/// ones, plus `extra` random ones over F_{q^2}.
template <class Rng>
PoleOrderCheck pole_order_check(const CurveParams& cp, Rng& rng, std::size_t extra = 200) {
  PoleOrderCheck out;
  const auto inf = infinite_points(cp);
  std::vector<std::pair<std::size_t, Vec4>> jobs;
  for (const auto& h : detail::projective_points(cp.fq()))
    for (std::size_t i = 0; i < inf.size(); ++i)
      if (detail::dot(h, embed(cp, inf[i]).coords()).is_zero()) jobs.emplace_back(i, h);
  for (std::size_t n = 0; n < extra; ++n) {
    const std::size_t i = rng() % inf.size();
    const Vec4 v = embed(cp, inf[i]).coords();
    // random hyperplane through v: pick h with h . v = 0 by solving for one coordinate
    Vec4 h = detail::random_vec(cp, rng, 2);
    std::size_t piv = 0;
    while (v[piv].is_zero()) ++piv;
    Fe rest = cp.zero();
    for (std::size_t j = 0; j < 4; ++j)
      if (j != piv) rest += h[j] * v[j];
    h[piv] = -rest / v[piv];
    if (std::all_of(h.begin(), h.end(), [](Fe x) { return x.is_zero(); })) continue;
    jobs.emplace_back(i, h);
  }
  const auto orders = parallel_map<int>(jobs.size(), [&](std::size_t j) {
    return ord_hyperplane(cp, inf[jobs[j].first], jobs[j].second);
  });
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    ++out.checked;
    ++out.histogram[orders[j]];
    const int o = orders[j];
    if (o != 1 && o != int(cp.q()) && o != int(cp.q()) + 1) out.violations.emplace_back(inf[jobs[j].first], jobs[j].second);
  }
  return out;
}

struct OracleCheck {
  std::size_t pairs = 0, agree = 0, disagree = 0, inconclusive = 0, commuting = 0;
  bool ok() const { return pairs > 0 && disagree == 0 && inconclusive == 0; }
};

/// Quadric-kernel test against pointwise evaluation for every (sigma, line) pair.
inline OracleCheck oracle_crosscheck(const GaloisAnalyzer& an, const std::vector<Line3>& lines) {
  const auto& els = an.aut().elements();
  const auto parts = parallel_map<OracleCheck>(lines.size(), [&](std::size_t i) {
    OracleCheck c;
    for (const auto& s : els) {
      ++c.pairs;
      const bool exact = an.commutes(s, lines[i]);
      const auto point = an.commutes_pointwise(s, lines[i]);
      c.commuting += exact;
      if (!point) ++c.inconclusive;
      else if (*point == exact) ++c.agree;
      else ++c.disagree;
    }
    return c;
  });
  OracleCheck out;
  for (const auto& c : parts) {
    out.pairs += c.pairs;
    out.agree += c.agree;
    out.disagree += c.disagree;
    out.inconclusive += c.inconclusive;
    out.commuting += c.commuting;
  }
  return out;
}

struct FiberSuite {
  std::size_t lines = 0, fibers = 0;
  std::vector<Line3> short_lines;  // fewer complete fibers than requested
  std::vector<Line3> failures;     // a complete fiber broke uniformity, transitivity or the stabilizer count
  bool ok() const { return lines > 0 && short_lines.empty() && failures.empty(); }
};

/// Ramification checks on `per_line` complete fibers of each (Galois) line.
inline FiberSuite fiber_suite(const GaloisAnalyzer& an, const std::vector<Line3>& lines, std::size_t per_line,
                              std::uint64_t seed) {
  struct Part {
    std::size_t fibers = 0;
    bool short_ = false, failed = false;
  };
  const auto parts = parallel_map<Part>(lines.size(), [&](std::size_t i) {
    std::mt19937_64 rng(seed + i);
    const auto a = an.analyze(lines[i]);
    const auto fibers = an.complete_fibers(lines[i], a.degree, per_line, rng);
    Part p;
    p.short_ = fibers.size() < per_line;
    for (const auto& f : fibers) {
      FiberCheck fc{f};
      an.check_fiber(a, fc);
      ++p.fibers;
      if (!(a.is_galois && fc.uniform && fc.transitive && fc.point_stabilizer_matches)) p.failed = true;
    }
    return p;
  });
  FiberSuite out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    ++out.lines;
    out.fibers += parts[i].fibers;
    if (parts[i].short_) out.short_lines.push_back(lines[i]);
    if (parts[i].failed) out.failures.push_back(lines[i]);
  }
  return out;
}

}  // namespace asmgal
