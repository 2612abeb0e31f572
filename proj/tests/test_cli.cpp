#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "asmgal/cli.hpp"

using namespace asmgal;

namespace {

struct Run {
  int rc;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "asm_galois");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int rc = run_cli(int(argv.size()), argv.data(), out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ClassifyPrintsCounts) {
  const auto r = run({"classify", "--q", "3"});
  EXPECT_EQ(r.rc, kExitOk);
  EXPECT_NE(r.out.find("2 + 9 + 2 = 13 lines, all Galois, matching"), std::string::npos) << r.out;
}

TEST(Cli, ClassifyWritesJson) {
  const auto path = std::filesystem::temp_directory_path() / "asmgal_classify_q4.json";
  const auto r = run({"classify", "--q", "4", "--c", "2", "--out", path.string()});
  ASSERT_EQ(r.rc, kExitOk) << r.err;
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["params"]["c"], 2);
  EXPECT_EQ(j["type_a"]["total"], 21);
  std::filesystem::remove(path);
}

TEST(Cli, CheckLine) {
  // L2 = {X = Z = 0}
  const auto r = run({"check-line", "--q", "3", "--h1", "1,0,0,0", "--h2", "0,0,1,0"});
  EXPECT_EQ(r.rc, kExitOk);
  EXPECT_NE(r.out.find("verdict Galois, degree 3, group F_3"), std::string::npos) << r.out;
  // a secant F_3-line outside the families
  const auto n = run({"check-line", "--q", "3", "--h1", "1,2,0,0", "--h2", "0,0,1,2"});
  EXPECT_EQ(n.rc, kExitOk);
  EXPECT_NE(n.out.find("verdict not Galois"), std::string::npos) << n.out;
  // the y-ruling with a = T in the standalone F_9 (code 3, so -a has code 6)
  const auto b = run({"check-line", "--q", "3", "--field-degree", "2", "--h1", "6,0,0,1", "--h2", "0,1,6,0"});
  EXPECT_EQ(b.rc, kExitOk);
  EXPECT_NE(b.out.find("class type-b"), std::string::npos) << b.out;
}

TEST(Cli, Fiber) {
  const auto r = run({"fiber", "--q", "3", "--line", "1,0,0,0;0,0,1,0", "--base", "1,0"});
  EXPECT_EQ(r.rc, kExitOk) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
  EXPECT_NE(r.out.find("index 1"), std::string::npos);
  const auto ram = run({"fiber", "--q", "3", "--line", "1,0,0,0;0,0,1,0", "--base", "2,1"});
  EXPECT_EQ(ram.rc, kExitOk);
  EXPECT_NE(ram.out.find("\"kind\":\"Q\""), std::string::npos) << ram.out;
  EXPECT_NE(ram.out.find("index 3"), std::string::npos);
  // a base code outside F_{q^ext} is a usage error
  const auto bad = run({"fiber", "--q", "3", "--line", "1,0,0,0;0,0,1,0", "--base", "3,1", "--ext", "1"});
  EXPECT_EQ(bad.rc, kExitUsage) << bad.err;
  // {W = Z = 0} over xy = 1: no point of the fiber is defined over F_3
  const auto hidden = run({"fiber", "--q", "3", "--line", "0,0,0,1;0,0,1,0", "--base", "1,1"});
  EXPECT_EQ(hidden.rc, kExitVerdict);
  EXPECT_NE(hidden.err.find("larger --ext"), std::string::npos);
  const auto big = run({"fiber", "--q", "3", "--line", "1,0,0,0;0,0,1,0", "--base", "3,1", "--ext", "2"});
  EXPECT_EQ(big.rc, kExitOk) << big.err;
  EXPECT_EQ(std::count(big.out.begin(), big.out.end(), '\n'), 3);
}

TEST(Cli, Aut) {
  const auto r = run({"aut", "--q", "4", "--table"});
  EXPECT_EQ(r.rc, kExitOk);
  EXPECT_EQ(r.out.rfind("order 96\n", 0), 0u);
  EXPECT_NE(r.out.find("elements"), std::string::npos);
}

TEST(Cli, ReportFormats) {
  const auto j = run({"report", "--q", "3", "--format", "json"});
  ASSERT_EQ(j.rc, kExitOk) << j.err;
  const auto parsed = nlohmann::json::parse(j.out);
  EXPECT_TRUE(parsed["all_checks_pass"].get<bool>());
  const auto c = run({"report", "--q", "3", "--format", "csv"});
  EXPECT_EQ(c.rc, kExitOk);
  const auto t = run({"report", "--q", "3", "--format", "text"});
  EXPECT_EQ(t.rc, kExitOk);
  EXPECT_NE(t.out.find("13 lines"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).rc, kExitUsage);
  EXPECT_EQ(run({"classify", "--q", "2"}).rc, kExitUsage);
  EXPECT_EQ(run({"classify", "--q", "6"}).rc, kExitUsage);
  EXPECT_EQ(run({"classify", "--q", "3", "--c", "0"}).rc, kExitUsage);
  EXPECT_EQ(run({"check-line", "--q", "3", "--h1", "1,0,0", "--h2", "0,0,1,0"}).rc, kExitUsage);
  EXPECT_EQ(run({"check-line", "--q", "3", "--h1", "1,0,0,0", "--h2", "2,0,0,0"}).rc, kExitUsage);
  EXPECT_EQ(run({"check-line", "--q", "3", "--h1", "9,0,0,0", "--h2", "0,0,1,0"}).rc, kExitUsage);
  EXPECT_EQ(run({"check-line", "--q", "3", "--field-degree", "4", "--h1", "1,0,0,0", "--h2", "0,0,1,0"}).rc,
            kExitUsage);
  EXPECT_EQ(run({"report", "--q", "3", "--format", "xml"}).rc, kExitUsage);
  EXPECT_EQ(run({"--help"}).rc, kExitOk);
}
