#include <gtest/gtest.h>

#include <random>

#include "asmgal/automorphism.hpp"

using namespace asmgal;

namespace {

std::vector<CurvePoint> test_points(const CurveParams& cp, std::size_t affine) {
  std::mt19937_64 rng(cp.q());
  auto pts = sample_affine_points(cp, 2, affine, rng);
  for (const auto& P : infinite_points(cp)) pts.push_back(P);
  return pts;
}

}  // namespace

TEST(Automorphism, ComposeAndInverse) {
  const CurveParams cp(5);
  const Fe a = cp.from_base(2), b = cp.from_base(3);
  const auto t = AutElement::translation(cp, a, b);
  const auto sw = AutElement::swap_xy(cp);
  // swap after the translation sends (x, y) to (y + b, x + a)
  EXPECT_EQ(compose(sw, t), (AutElement{cp.one(), b, a, true}));
  EXPECT_EQ(compose(sw, sw), AutElement::identity(cp));
  const auto g = AutElement::scaling(cp, cp.from_base(2));
  EXPECT_EQ(compose(g, g), AutElement::scaling(cp, cp.from_base(4)));
  const auto G = enumerate_aut(cp);
  for (const auto& s : G.elements()) {
    EXPECT_EQ(compose(s, inverse(s)), AutElement::identity(cp));
    EXPECT_EQ(compose(inverse(s), s), AutElement::identity(cp));
  }
}

TEST(Automorphism, ActionOnPolesAndAffinePoints) {
  const CurveParams cp(3);
  for (Fe al : cp.fq()) {
    EXPECT_EQ(act_on_point(AutElement::swap_xy(cp), CurvePoint::pole_of_x(al)), CurvePoint::pole_of_y(al));
    for (Fe be : cp.fq()) {
      EXPECT_EQ(act_on_point(AutElement::translation(cp, cp.zero(), be), CurvePoint::pole_of_x(al)),
                CurvePoint::pole_of_x(al + be));
      EXPECT_EQ(act_on_point(AutElement::translation(cp, be, cp.zero()), CurvePoint::pole_of_x(al)),
                CurvePoint::pole_of_x(al));
    }
  }
  const auto G = enumerate_aut(cp);
  for (const auto& P : test_points(cp, 10))
    for (const auto& s : G.elements()) EXPECT_TRUE(is_on_curve(cp, act_on_point(s, P)));
}

TEST(Automorphism, TranslationMatrix) {
  const CurveParams cp(3);
  const Fe z = cp.zero(), o = cp.one();
  const Mat4 m = to_matrix(cp, AutElement::translation(cp, o, z));
  // X' = X + Z, Y' = Y, Z' = Z, W' = W + Y
  const Mat4 want{Vec4{o, z, o, z}, Vec4{z, o, z, z}, Vec4{z, z, o, z}, Vec4{z, o, z, o}};
  EXPECT_EQ(m, want);
}

TEST(Automorphism, MatrixAgreesWithPointAction) {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const CurveParams cp(q);
    const auto G = enumerate_aut(cp);
    const auto pts = test_points(cp, 12);
    for (const auto& s : G.elements()) {
      const Mat4 m = to_matrix(cp, s);
      for (const auto& P : pts)
        ASSERT_EQ(ProjPoint3(apply(m, embed(cp, P).coords())), embed(cp, act_on_point(s, P)));
    }
  }
}

TEST(Automorphism, HomomorphismAndFaithfulness) {
  const CurveParams cp(4);
  const auto G = enumerate_aut(cp);
  const auto pts = test_points(cp, 6);
  std::mt19937_64 rng(9);
  const auto& el = G.elements();
  for (int it = 0; it < 300; ++it) {
    const auto& s = el[rng() % el.size()];
    const auto& t = el[rng() % el.size()];
    for (const auto& P : pts) ASSERT_EQ(act_on_point(compose(s, t), P), act_on_point(s, act_on_point(t, P)));
    EXPECT_EQ(normalize_projective(multiply(to_matrix(cp, s), to_matrix(cp, t))), to_matrix(cp, compose(s, t)));
  }
  std::set<std::vector<CurvePoint>> images;
  for (const auto& s : el) {
    std::vector<CurvePoint> img;
    for (const auto& P : pts) img.push_back(act_on_point(s, P));
    images.insert(img);
  }
  EXPECT_EQ(images.size(), el.size());
}

TEST(Automorphism, GroupOrders) {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const CurveParams cp(q);
    const auto G = enumerate_aut(cp);
    EXPECT_EQ(G.order(), 2u * q * q * (q - 1));
    EXPECT_EQ(Subgroup::generated_by(cp, G.generators()), G);
  }
}

TEST(Automorphism, SubgroupClosureIsEnforced) {
  const CurveParams cp(3);
  try {
    Subgroup({AutElement::identity(cp), AutElement::translation(cp, cp.one(), cp.zero())}, {});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotClosed);
  }
}

TEST(Automorphism, GroupTypes) {
  const CurveParams cp(4);
  const Fe z = cp.zero();
  // translations in y: elementary abelian of order 4, every non-identity element of order 2
  std::vector<AutElement> gens;
  for (Fe b : fq_basis(cp)) gens.push_back(AutElement::translation(cp, z, b));
  const auto T = Subgroup::generated_by(cp, gens);
  std::multiset<std::uint64_t> orders;
  for (const auto& s : T.elements()) orders.insert(element_order(s));
  EXPECT_EQ(orders, (std::multiset<std::uint64_t>{1, 2, 2, 2}));
  EXPECT_EQ(group_type(T, cp).tag, GroupTag::Fq);
  EXPECT_EQ(group_type(T, cp).name(), "F_q");

  // diagonal translations together with the swap
  const auto with_swap = Subgroup::generated_by(cp, {AutElement::translation(cp, cp.one(), cp.one()),
                                                     AutElement::translation(cp, fq_basis(cp)[1], fq_basis(cp)[1]),
                                                     AutElement::swap_xy(cp)});
  EXPECT_EQ(with_swap.order(), 8u);
  EXPECT_EQ(group_type(with_swap, cp).tag, GroupTag::FqSemiC2);

  const auto dihedral =
      Subgroup::generated_by(cp, {AutElement::scaling(cp, fq_primitive(cp)), AutElement::swap_xy(cp)});
  EXPECT_EQ(dihedral.order(), 6u);
  EXPECT_EQ(group_type(dihedral, cp).tag, GroupTag::FqStarSemiC2);

  EXPECT_EQ(group_type(Subgroup::generated_by(cp, {}), cp).tag, GroupTag::Trivial);
  const auto all = group_type(enumerate_aut(cp), cp);
  EXPECT_EQ(all.tag, GroupTag::Other);
  EXPECT_FALSE(all.abelian);
}
