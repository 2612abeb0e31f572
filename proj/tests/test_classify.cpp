#include <gtest/gtest.h>

#include <random>

#include "asmgal/classify.hpp"
#include "asmgal/report.hpp"

using namespace asmgal;

namespace {

const GaloisAnalyzer& analyzer(std::uint32_t q, std::uint32_t c = 1) {
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<GaloisAnalyzer>> cache;
  auto& slot = cache[{q, c}];
  if (!slot) slot = std::make_unique<GaloisAnalyzer>(CurveParams(q, c));
  return *slot;
}

}  // namespace

TEST(Classify, PlaneLineCounts) {
  for (auto [q, c] : {std::pair{3u, 2u}, {4u, 1u}, {5u, 3u}}) {
    const auto pc = classify_plane_lines(analyzer(q, c));
    EXPECT_EQ(pc.total(), std::size_t(q * q + q + 1));
    EXPECT_EQ(pc.n_fq_semi_c2, q - 1);
    EXPECT_EQ(pc.n_fq_star_semi_c2, std::size_t(q) * q);
    EXPECT_EQ(pc.n_fq, 2u);
    EXPECT_EQ(pc.n_other, 0u);
    EXPECT_TRUE(pc.all_galois);
    EXPECT_TRUE(pc.all_generators_match);
    EXPECT_TRUE(pc.matches(q));
    for (const auto& row : pc.rows) {
      // degree from the intersection count, independently of the stabilizer
      int meet = 0;
      for (const auto& i : row.analysis.intersections) meet += i.multiplicity;
      EXPECT_EQ(row.analysis.degree, 2 * int(q) - meet);
    }
  }
}

TEST(Classify, TypeBSample) {
  std::mt19937_64 rng(21);
  const auto& an = analyzer(4);
  const auto scan = sample_type_b(an, rng);
  EXPECT_TRUE(scan.all_ok());
  std::set<Fe> as;
  for (const auto& r : scan.rows) {
    as.insert(r.a);
    EXPECT_EQ(r.analysis.degree, 4);
  }
  EXPECT_GE(as.size(), 24u);
}

TEST(Classify, NegativeScanFindsNoGaloisLines) {
  const auto& an = analyzer(3);
  const auto scan = negative_scan(an, 60, 5);
  EXPECT_TRUE(scan.false_positives.empty());
  EXPECT_EQ(scan.rows.size(), 60u);
  EXPECT_TRUE(scan.single_point_ok);
  std::set<NegativeStrategy> used;
  for (const auto& r : scan.rows) {
    used.insert(r.strategy);
    EXPECT_FALSE(r.analysis.is_galois);
    EXPECT_EQ(r.analysis.classification.family, LineFamily::None);
  }
  EXPECT_EQ(used.size(), 4u);
}

TEST(Classify, SectionCollinearity) {
  std::mt19937_64 rng(2);
  const auto s = section_collinearity_check(CurveParams(5, 2), rng);
  EXPECT_TRUE(s.all_ok());
  EXPECT_GE(s.rows.size(), 36u);
}

TEST(Classify, PropertySuites) {
  const auto& an = analyzer(3);
  const auto aut = aut_check(an);
  EXPECT_TRUE(aut.ok());
  EXPECT_EQ(aut.order, 36u);

  std::mt19937_64 rng(6);
  const auto poles = pole_order_check(an.params(), rng, 50);
  EXPECT_TRUE(poles.ok(3));
  EXPECT_GT(poles.histogram.at(1), 0u);
  EXPECT_GT(poles.histogram.at(3), 0u);
  EXPECT_GT(poles.histogram.at(4), 0u);

  const auto lines = enumerate_fq_lines(an.params().fq());
  const auto oracle = oracle_crosscheck(an, lines);
  EXPECT_TRUE(oracle.ok());
  EXPECT_EQ(oracle.pairs, 130u * 36u);

  std::vector<Line3> galois;
  for (const auto& row : classify_plane_lines(an).rows) galois.push_back(row.analysis.line);
  const auto fs = fiber_suite(an, galois, 10, 3);
  EXPECT_TRUE(fs.ok());
  EXPECT_EQ(fs.fibers, 10u * galois.size());
}

TEST(Report, JsonShapeAndDeterminism) {
  const auto& an = analyzer(4);
  ReportOptions opt;
  opt.full = true;
  opt.negative_count = 30;
  opt.seed = 9;
  const auto a = to_json(an.params(), build_report(an, opt));
  const auto b = to_json(an.params(), build_report(an, opt));
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["schema"], 1);
  EXPECT_EQ(a["params"]["q"], 4);
  EXPECT_FALSE(a.contains("timing"));
  EXPECT_TRUE(a["all_checks_pass"].get<bool>());
  EXPECT_EQ(a["type_a"]["counts"]["F_q:C2"], 3);
  EXPECT_EQ(a["type_a"]["counts"]["F_q*:C2"], 16);
  EXPECT_EQ(a["type_a"]["counts"]["F_q"], 2);
  EXPECT_EQ(a["negative"]["rows"].size(), 30u);
  opt.timing = true;
  EXPECT_TRUE(to_json(an.params(), build_report(an, opt)).contains("timing"));
}

TEST(Report, CsvAndText) {
  const auto& an = analyzer(3);
  const auto r = build_report(an, ReportOptions{});
  const auto csv = to_csv(an.params(), r);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 13 + std::ptrdiff_t(r.type_b.rows.size()));
  const auto text = to_text(an.params(), r);
  EXPECT_NE(text.find("2 + 9 + 2 = 13 lines, all Galois"), std::string::npos);
}
