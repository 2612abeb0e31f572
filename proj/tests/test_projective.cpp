#include <gtest/gtest.h>

#include <set>

#include "asmgal/projective.hpp"

using namespace asmgal;

namespace {

std::vector<Fe> elements(const FieldCtx& f) {
  std::vector<Fe> out;
  for (std::uint32_t v = 0; v < f.size(); ++v) out.emplace_back(f, v);
  return out;
}

Vec4 v4(const FieldCtx& f, std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
  return {Fe(f, a), Fe(f, b), Fe(f, c), Fe(f, d)};
}

// number of points of P^3(F_q) on the line, counted by brute force
int points_on(const Line3& l, const std::vector<Fe>& fq) {
  int n = 0;
  for (const auto& v : detail::projective_points(fq))
    if (contains(l, ProjPoint3(v))) ++n;
  return n;
}

}  // namespace

TEST(Projective, LineThroughTwoCoordinatePoints) {
  const auto& f = build_field(3, 1);
  const auto l = line_through(ProjPoint3(v4(f, 1, 0, 0, 0)), ProjPoint3(v4(f, 0, 1, 0, 0)));
  EXPECT_EQ(l, Line3(v4(f, 0, 0, 1, 0), v4(f, 0, 0, 0, 1)));
}

TEST(Projective, RulingThroughInfiniteAndAffinePoint) {
  const auto& f = build_field(3, 2);
  const Fe a(f, 5), one = Fe::one(f), z = Fe::zero(f);
  const auto l = line_through(ProjPoint3(Vec4{one, z, z, a}), ProjPoint3(Vec4{z, a, one, z}));
  EXPECT_EQ(l, Line3(Vec4{-a, z, z, one}, Vec4{z, one, -a, z}));
}

TEST(Projective, CoincidentPointsRejected) {
  const auto& f = build_field(3, 1);
  const ProjPoint3 P(v4(f, 1, 2, 0, 1));
  const ProjPoint3 Q(v4(f, 2, 1, 0, 2));  // 2 * P
  EXPECT_EQ(P, Q);
  try {
    (void)line_through(P, Q);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CoincidentPoints);
  }
  try {
    (void)Line3(v4(f, 1, 1, 0, 0), v4(f, 2, 2, 0, 0));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateLine);
  }
}

TEST(Projective, PlaneLineCounts) {
  for (std::uint32_t e : {1u, 2u}) {
    const auto& f = build_field(e == 1 ? 3 : 2, e);
    const auto fq = elements(f);
    const std::size_t q = fq.size();
    const auto lines = enumerate_plane_fq_lines(fq);
    EXPECT_EQ(lines.size(), q * q + q + 1);
    const Hyperplane Z(v4(f, 0, 0, 1, 0));
    for (const auto& l : lines) {
      EXPECT_TRUE(contains(Z, l));
      EXPECT_EQ(points_on(l, fq), static_cast<int>(q + 1));
    }
  }
}

TEST(Projective, AllLinesOverF3) {
  const auto& f = build_field(3, 1);
  const auto fq = elements(f);
  const auto lines = enumerate_fq_lines(fq);
  // (q^2 + 1)(q^2 + q + 1)
  EXPECT_EQ(lines.size(), 130u);
  // every pair of distinct points lies on exactly one of them
  const auto pts = detail::projective_points(fq);
  ASSERT_EQ(pts.size(), 40u);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      int n = 0;
      for (const auto& l : lines) n += contains(l, ProjPoint3(pts[i])) && contains(l, ProjPoint3(pts[j]));
      ASSERT_EQ(n, 1);
    }
}

TEST(Projective, FqLineDetection) {
  const auto& f = build_field(2, 4);
  const Fe w(f, 2), one = Fe::one(f), z = Fe::zero(f);
  EXPECT_TRUE(is_fq_line(Line3(Vec4{one, z, z, z}, Vec4{z, one, z, z}), 2));
  const Line3 l(Vec4{one, w, z, z}, Vec4{z, z, one, z});
  EXPECT_FALSE(is_fq_line(l, 2));
  EXPECT_EQ(is_fq_line(l, 4), in_subfield(w, 4));
  EXPECT_TRUE(is_fq_line(l, 16));
}
