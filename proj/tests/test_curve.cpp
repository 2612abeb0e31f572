#include <gtest/gtest.h>

#include <random>

#include "asmgal/curve.hpp"

using namespace asmgal;

namespace {

Vec4 form(const CurveParams& cp, Fe a, Fe b, Fe c, Fe d) {
  (void)cp;
  return {a, b, c, d};
}

int error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return static_cast<int>(e.code());
  }
  return -1;
}

}  // namespace

TEST(Curve, ParameterValidation) {
  EXPECT_EQ(error_code([] { CurveParams(6); }), int(ErrorCode::InvalidArgument));
  EXPECT_EQ(error_code([] { CurveParams(2); }), int(ErrorCode::InvalidArgument));
  EXPECT_EQ(error_code([] { CurveParams(3, 0); }), int(ErrorCode::InvalidArgument));
  EXPECT_EQ(error_code([] { CurveParams(3, 3); }), int(ErrorCode::InvalidArgument));
  const CurveParams cp(4, 3);
  EXPECT_EQ(cp.p(), 2u);
  EXPECT_EQ(cp.e(), 2u);
  EXPECT_EQ(cp.fq().size(), 4u);
  EXPECT_TRUE(cp.in_fq(cp.c()));
}

TEST(Curve, EmbeddingAndQuadric) {
  const CurveParams cp(3);
  const Fe z = cp.zero(), o = cp.one();
  EXPECT_FALSE(on_quadric(ProjPoint3(Vec4{o, o, o, z})));
  EXPECT_TRUE(on_quadric(ProjPoint3(Vec4{z, z, o, z})));
  for (Fe a : cp.fq()) {
    EXPECT_EQ(embed(cp, CurvePoint::pole_of_x(a)), ProjPoint3(Vec4{o, z, z, a}));
    EXPECT_EQ(embed(cp, CurvePoint::pole_of_y(a)), ProjPoint3(Vec4{z, o, z, a}));
  }
  std::mt19937_64 rng(1);
  for (const auto& P : sample_affine_points(cp, 2, 10, rng)) {
    EXPECT_TRUE(is_on_curve(cp, P));
    const auto E = embed(cp, P);
    EXPECT_EQ(E, ProjPoint3(Vec4{P.x, P.y, o, P.x * P.y}));
    EXPECT_TRUE(on_quadric(E));
  }
}

TEST(Curve, AffinePointCountMatchesBruteForce) {
  // q = 3 over F_9 and over the full ambient field F_729
  const CurveParams cp(3);
  std::vector<Fe> all;
  for (std::uint32_t v = 0; v < cp.ambient().size(); ++v) all.emplace_back(cp.ambient(), v);
  for (std::uint32_t k : {2u, 6u}) {
    const auto& elems = k == 6 ? all : cp.subfield(k);
    std::size_t brute = 0;
    std::vector<Fe> asv;
    for (Fe x : elems) asv.push_back(artin_schreier_value(cp, x));
    for (Fe a : asv)
      for (Fe b : asv) brute += a * b == cp.c();
    std::size_t fast = 0;
    for (Fe x : elems) {
      const Fe A = artin_schreier_value(cp, x);
      if (A.is_zero()) continue;
      for (Fe y : artin_schreier_roots(cp, cp.c() / A)) fast += cp.in_level(y, k);
    }
    EXPECT_EQ(fast, brute) << "k = " << k;
  }
}

TEST(Curve, ExpansionAtPoleSatisfiesCurveEquation) {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const CurveParams cp(q, q - 1);
    const std::size_t n = 4 * q;
    for (Fe a : cp.fq()) {
      const auto ex = local_expansion(cp, CurvePoint::pole_of_x(a), n);
      const Series& t = ex.coords[2];
      EXPECT_EQ(t.order(), 1u);
      EXPECT_TRUE(t[1].is_one());
      const Series& y = ex.coords[3];
      EXPECT_EQ(y[0], a);
      for (std::size_t i = 1; i < q; ++i) EXPECT_TRUE(y[i].is_zero());
      EXPECT_EQ(y[q], -cp.c());
      // (1 - t^{q-1}) (y^q - y) = c t^q
      const Series one = Series::constant(cp.one(), n);
      const Series lhs = (one - Series::monomial(cp.one(), q - 1, n)) * (y.frobenius(q) - y);
      const Series rhs = Series::monomial(cp.c(), q, n);
      for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(lhs[i], rhs[i]);
    }
  }
}

TEST(Curve, ExpansionAtAffinePointSatisfiesCurveEquation) {
  const CurveParams cp(4, 2);
  std::mt19937_64 rng(5);
  const std::size_t n = 20;
  for (const auto& P : sample_affine_points(cp, 2, 6, rng)) {
    const auto ex = local_expansion(cp, P, n);
    const Series& x = ex.coords[0];
    const Series& y = ex.coords[1];
    EXPECT_EQ(x[0], P.x);
    EXPECT_EQ(y[0], P.y);
    const Series prod = (x.frobenius(4) - x) * (y.frobenius(4) - y);
    EXPECT_EQ(prod[0], cp.c());
    for (std::size_t i = 1; i < n; ++i) EXPECT_TRUE(prod[i].is_zero());
    const Series w = ex.coords[3] - x * y;
    EXPECT_TRUE(w.is_zero());
  }
}

TEST(Curve, OrdersAtPoles) {
  for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
    const CurveParams cp(q);
    const Fe z = cp.zero(), o = cp.one();
    for (Fe a : cp.fq()) {
      const auto P = CurvePoint::pole_of_x(a);
      EXPECT_EQ(ord_hyperplane(cp, P, form(cp, z, z, o, z)), 1);
      EXPECT_EQ(ord_hyperplane(cp, P, form(cp, z, o, -a, z)), int(q) + 1);
      EXPECT_EQ(ord_hyperplane(cp, P, form(cp, -a, z, z, o)), int(q));
      const auto Q = CurvePoint::pole_of_y(a);
      EXPECT_EQ(ord_hyperplane(cp, Q, form(cp, o, z, -a, z)), int(q) + 1);
      EXPECT_EQ(ord_hyperplane(cp, Q, form(cp, z, -a, z, o)), int(q));
    }
  }
}

TEST(Curve, HyperplaneSectionsHaveDegreeTwoQ) {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const CurveParams cp(q);
    std::mt19937_64 rng(q);
    int complete = 0;
    for (int it = 0; it < 40; ++it) {
      const std::uint32_t k = it % 2 ? 1 : 2;
      Vec4 h{cp.random_element(rng, k), cp.random_element(rng, k), cp.random_element(rng, k),
             cp.random_element(rng, k)};
      if (h[0].is_zero() && h[1].is_zero() && h[2].is_zero() && h[3].is_zero()) continue;
      const auto s = hyperplane_section(cp, h);
      if (!s.complete) continue;
      ++complete;
      int total = 0;
      for (const auto& P : s.points) {
        EXPECT_TRUE(Hyperplane(h).contains(embed(cp, P)));
        total += ord_hyperplane(cp, P, h);
      }
      EXPECT_EQ(total, 2 * int(q));
    }
    EXPECT_GT(complete, 5);
  }
}

TEST(Curve, LineIntersections) {
  const CurveParams cp(3);
  const Fe z = cp.zero(), o = cp.one();
  for (Fe a : cp.fq()) {
    // the tangent line at P_a
    const auto r = line_curve_intersections(cp, Line3(Vec4{z, o, -a, z}, Vec4{-a, z, z, o}));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].point, CurvePoint::pole_of_x(a));
    EXPECT_EQ(r[0].multiplicity, 3);
    if (!a.is_zero()) {
      EXPECT_TRUE(line_curve_intersections(cp, Line3(Vec4{o, -a, z, z}, Vec4{z, z, o, z})).empty());
    }
  }
  std::mt19937_64 rng(2);
  for (int it = 0; it < 5; ++it) {
    const Fe a = cp.random_new_element(rng, 2);
    const auto r = line_curve_intersections(cp, Line3(Vec4{-a, z, z, o}, Vec4{z, o, -a, z}));
    ASSERT_EQ(r.size(), 3u);
    for (const auto& i : r) {
      EXPECT_EQ(i.multiplicity, 1);
      EXPECT_TRUE(i.point.is_affine());
      EXPECT_EQ(i.point.y, a);
    }
  }
}

TEST(Curve, ErrorsFromOrders) {
  const CurveParams cp(3);
  const Fe z = cp.zero(), o = cp.one();
  const auto P = CurvePoint::pole_of_x(z);
  EXPECT_EQ(error_code([&] { (void)ord_hyperplane(cp, P, Vec4{o, z, z, z}); }), int(ErrorCode::NotOnHyperplane));
  EXPECT_EQ(error_code([&] { (void)local_expansion(cp, P, 0); }), int(ErrorCode::PrecisionTooSmall));
  EXPECT_EQ(error_code([&] { (void)ord_hyperplane(cp, P, Vec4{z, z, o, z}, 1); }),
            int(ErrorCode::PrecisionExhausted));
}
