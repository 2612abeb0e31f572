#include <gtest/gtest.h>

#include <random>

#include "asmgal/galois.hpp"

using namespace asmgal;

namespace {

const GaloisAnalyzer& analyzer(std::uint32_t q, std::uint32_t c = 1) {
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<GaloisAnalyzer>> cache;
  auto& slot = cache[{q, c}];
  if (!slot) slot = std::make_unique<GaloisAnalyzer>(CurveParams(q, c));
  return *slot;
}

Subgroup y_translations(const CurveParams& cp) {
  std::vector<AutElement> gens;
  for (Fe b : fq_basis(cp)) gens.push_back(AutElement::translation(cp, cp.zero(), b));
  return Subgroup::generated_by(cp, gens);
}

}  // namespace

TEST(Galois, CommutationWithAxis) {
  const auto& an = analyzer(3);
  const auto& cp = an.params();
  const Line3 L2 = line_L2(cp);
  for (Fe b : cp.fq()) {
    const auto t = AutElement::translation(cp, cp.zero(), b);
    EXPECT_TRUE(an.commutes(t, L2));
    EXPECT_EQ(an.commutes_pointwise(t, L2), std::optional<bool>(true));
  }
  const auto sw = AutElement::swap_xy(cp);
  EXPECT_FALSE(an.commutes(sw, L2));
  EXPECT_EQ(an.commutes_pointwise(sw, L2), std::optional<bool>(false));
  EXPECT_EQ(an.stabilizer(L2), y_translations(cp));
}

TEST(Galois, AxesAreGaloisOfDegreeQ) {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const auto& an = analyzer(q);
    const auto& cp = an.params();
    for (const Line3& l : {line_L1(cp), line_L2(cp)}) {
      const auto a = an.analyze(l);
      EXPECT_EQ(a.degree, int(q));
      EXPECT_TRUE(a.is_galois);
      EXPECT_EQ(a.group_type.tag, GroupTag::Fq);
      EXPECT_EQ(a.intersections.size(), q);
      EXPECT_EQ(a.classification.tag, LineTag::TypeAThroughCenter);
    }
  }
}

TEST(Galois, CenterLineInEvenCharacteristic) {
  const auto& an = analyzer(4);
  const auto& cp = an.params();
  const auto a = an.analyze(center_line(cp, cp.one()));  // {X - Y = Z = 0}
  EXPECT_EQ(a.degree, 8);
  EXPECT_EQ(a.stabilizer.order(), 8u);
  EXPECT_TRUE(a.is_galois);
  EXPECT_EQ(a.group_type.tag, GroupTag::FqSemiC2);
  EXPECT_EQ(a.classification.family, LineFamily::CenterSlope);
  EXPECT_EQ(Subgroup::generated_by(cp, expected_generators(cp, a.classification)), a.stabilizer);
}

TEST(Galois, AvoidingLines) {
  const auto& an = analyzer(5);
  const auto& cp = an.params();
  for (Fe al : {cp.from_base(0), cp.from_base(3)})
    for (Fe be : {cp.from_base(1), cp.from_base(4)}) {
      const auto a = an.analyze(avoiding_line(cp, al, be));
      EXPECT_EQ(a.degree, 8);
      EXPECT_TRUE(a.is_galois);
      EXPECT_EQ(a.group_type.tag, GroupTag::FqStarSemiC2);
      EXPECT_EQ(a.classification.tag, LineTag::TypeAAvoidingCenter);
      EXPECT_EQ(Subgroup::generated_by(cp, expected_generators(cp, a.classification)), a.stabilizer);
    }
}

TEST(Galois, RulingLinesShareTheAxisGroup) {
  for (std::uint32_t q : {3u, 4u}) {
    const auto& an = analyzer(q);
    const auto& cp = an.params();
    const auto g1 = an.stabilizer(line_L1(cp)), g2 = an.stabilizer(line_L2(cp));
    std::mt19937_64 rng(q);
    for (int it = 0; it < 4; ++it) {
      const Fe a = cp.random_new_element(rng, 2);
      const auto y = an.analyze(y_ruling(cp, a));
      EXPECT_TRUE(y.is_galois);
      EXPECT_EQ(y.degree, int(q));
      EXPECT_EQ(y.stabilizer, g2);
      EXPECT_EQ(y.classification.tag, LineTag::TypeB);
      EXPECT_EQ(y.classification.family, LineFamily::YRuling);
      const auto x = an.analyze(x_ruling(cp, a));
      EXPECT_TRUE(x.is_galois);
      EXPECT_EQ(x.stabilizer, g1);
      EXPECT_EQ(x.classification.family, LineFamily::XRuling);
    }
    for (Fe a : cp.fq()) {
      const auto t = an.analyze(y_ruling(cp, a));
      EXPECT_EQ(t.classification.tag, LineTag::TangentTypeB);
      ASSERT_EQ(t.intersections.size(), 1u);
      EXPECT_EQ(t.intersections[0].point, CurvePoint::pole_of_x(a));
      EXPECT_EQ(t.intersections[0].multiplicity, int(q));
      EXPECT_TRUE(t.is_galois);
    }
  }
}

TEST(Galois, UnresolvedIntersectionsAreTransversal) {
  // a in F_27 \ F_3: the points with y = a have x in F_{3^9}, beyond F_729
  const auto& an = analyzer(3);
  const auto& cp = an.params();
  std::mt19937_64 rng(4);
  int seen = 0;
  for (int it = 0; it < 20; ++it) {
    const Fe a = cp.random_new_element(rng, 3);
    const auto an_y = an.analyze(y_ruling(cp, a));
    EXPECT_EQ(an_y.intersections.size() + an_y.unresolved_intersections, 3u);
    EXPECT_EQ(an_y.degree, 3);
    EXPECT_TRUE(an_y.is_galois);
    seen += an_y.unresolved_intersections > 0;
  }
  EXPECT_GT(seen, 0);
}

TEST(Galois, FibersOverTheAxis) {
  const auto& an = analyzer(3);
  const auto& cp = an.params();
  const Line3 L2 = line_L2(cp);
  for (Fe x0 : cp.fq()) {
    const auto f = an.fiber(L2, {x0, cp.one()}, 1);
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0].point, CurvePoint::pole_of_y(x0));
    EXPECT_EQ(f[0].ramification_index, 3);
  }
  const auto inf = an.fiber(L2, {cp.one(), cp.zero()}, 1);
  ASSERT_EQ(inf.size(), 3u);
  for (const auto& fp : inf) {
    EXPECT_EQ(fp.point.kind, CurvePoint::Kind::P);
    EXPECT_EQ(fp.ramification_index, 1);
  }
  std::mt19937_64 rng(8);
  const Fe x0 = cp.random_new_element(rng, 2);
  const auto gen = an.fiber(L2, {x0, cp.one()}, 2);
  ASSERT_EQ(gen.size(), 3u);
  for (const auto& fp : gen) {
    EXPECT_EQ(fp.point.x, x0);
    EXPECT_EQ(fp.ramification_index, 1);
  }
  // over F_q alone the generic fiber is invisible
  try {
    (void)an.fiber(L2, {x0, cp.one()}, 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BaseOnBranchTooSmallField);
  }
}

TEST(Galois, RamificationConsistentOnGaloisLines) {
  const auto& an = analyzer(4);
  const auto& cp = an.params();
  const auto rep = an.ramification_consistency(center_line(cp, cp.one()), an.rational_bases());
  EXPECT_TRUE(rep.consistent);
  EXPECT_FALSE(rep.fibers.empty());
  EXPECT_TRUE(rep.certificates.empty());
}

TEST(Galois, NonGaloisLinesHaveCertificates) {
  const auto& an = analyzer(3);
  const auto& cp = an.params();
  std::size_t negatives = 0, certified = 0;
  for (const auto& l : enumerate_fq_lines(cp.fq())) {
    const auto a = an.analyze(l);
    if (a.classification.family != LineFamily::None) continue;
    ++negatives;
    EXPECT_FALSE(a.is_galois);
    EXPECT_EQ(a.classification.tag, LineTag::NonGalois);
    EXPECT_THROW((void)expected_generators(cp, a.classification), Error);
    const auto cert = an.mixed_fibers(l, a.degree, an.rational_bases());
    if (cert.empty()) continue;
    ++certified;
    int total = 0;
    for (const auto& fp : cert[0].points) total += fp.ramification_index;
    EXPECT_EQ(total, a.degree);
  }
  EXPECT_GT(negatives, 0u);
  EXPECT_GT(certified, 0u);
}

TEST(Galois, ProjectionIsStabilizerInvariant) {
  const auto& an = analyzer(5);
  const auto& cp = an.params();
  const Line3 l = avoiding_line(cp, cp.from_base(2), cp.from_base(1));
  const auto stab = an.stabilizer(l);
  for (const auto& P : an.sample_points())
    for (const auto& s : stab.elements()) ASSERT_EQ(an.project(l, act_on_point(s, P)), an.project(l, P));
}
