#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "dgsep/cli.hpp"
#include "dgsep/demos.hpp"

using namespace dgsep;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = runCli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::string writeTemp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("dgsep_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, SeparableVerdicts) {
  auto dn = run({"separable", "--demo", "dual-numbers-over-Q"});
  EXPECT_EQ(dn.code, kDecisionCompleted);
  EXPECT_TRUE(has(dn.out, "verdict: NOT_SEPARABLE")) << dn.out;

  auto lau = run({"separable", "--demo", "laurent", "F2", "3"});
  EXPECT_EQ(lau.code, kDecisionCompleted);
  EXPECT_TRUE(has(lau.out, "verdict: SEPARABLE")) << lau.out;

  auto bad = run({"separable", "--demo", "laurent", "F3", "3"});
  EXPECT_TRUE(has(bad.out, "verdict: NOT_SEPARABLE")) << bad.out;
}

TEST(Cli, JsonFormat) {
  auto r = run({"separable", "--demo", "laurent", "F2", "3", "--format", "json"});
  ASSERT_EQ(r.code, kDecisionCompleted);
  auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["verdict"], "SEPARABLE");
  EXPECT_EQ(doc["command"], "separable");
}

TEST(Cli, MainTheoremCatalog) {
  auto r = run({"main-theorem"});
  EXPECT_EQ(r.code, kDecisionCompleted);
  EXPECT_TRUE(has(r.out, "mismatches: 0")) << r.out;
  auto silent = run({"main-theorem", "--demo", "laurent-into-acyclic", "F2", "w=0"});
  EXPECT_TRUE(has(silent.out, "verdict: THEOREM_SILENT")) << silent.out;
}

TEST(Cli, SplittingCommands) {
  auto cone = run({"ses-split", "--demo", "ses", "F4", "cone"});
  EXPECT_EQ(cone.code, kDecisionCompleted);
  EXPECT_TRUE(has(cone.out, "verdict: NOT_SPLIT")) << cone.out;

  auto target = run({"ses-split", "--demo", "ses", "square-zero", "Q"});
  EXPECT_TRUE(has(target.out, "verdict: NOT_SPLIT")) << target.out;
  auto source = run({"ses-split", "--demo", "ses", "square-zero", "Q", "--base", "source"});
  EXPECT_TRUE(has(source.out, "verdict: SPLIT")) << source.out;

  auto lift = run({"lift-split", "--demo", "ses", "Laurent", "odd-scrambled"});
  EXPECT_EQ(lift.code, kDecisionCompleted);
  EXPECT_TRUE(has(lift.out, "verdict: SPLIT")) << lift.out;
}

TEST(Cli, AlgebraCommands) {
  EXPECT_EQ(run({"validate", "--demo", "dual-numbers-over-Q"}).code, kDecisionCompleted);
  EXPECT_EQ(run({"homology", "--demo", "acyclic-division", "F5", "w=0"}).code, kDecisionCompleted);
  EXPECT_EQ(run({"cycles", "--demo", "acyclic-division", "F5", "w=Xinv"}).code, kDecisionCompleted);
  EXPECT_EQ(run({"tensor", "--demo", "laurent", "F2", "3"}).code, kDecisionCompleted);
  auto div = run({"dgdiv-check", "--demo", "acyclic-division", "F5", "w=0"});
  EXPECT_EQ(div.code, kDecisionCompleted);
  auto gr = run({"grdiv-classify", "--demo", "square-zero", "Q"});
  EXPECT_EQ(gr.code, kDecisionCompleted);
  EXPECT_TRUE(has(gr.out, "not-gr-division")) << gr.out;
  auto eq = run({"equivalence-check", "--demo", "dual-numbers-over-F3", "--seed", "3"});
  EXPECT_EQ(eq.code, kDecisionCompleted);
  EXPECT_TRUE(has(eq.out, "20/20")) << eq.out;
}

TEST(Cli, ExitCodes) {
  auto bad = writeTemp("bad.json", R"({"field": "Q", "basis": [["1", 0], ["X", 1]],
    "products": [[0, 0, [[0, 0, 1]]], [0, 1, [[1, 0, 1]]], [1, 0, [[1, 0, 1]]], [1, 1, [[0, 0, 1]]]],
    "unit": [[0, 0, 1]]})");
  auto v = run({"validate", bad});
  EXPECT_EQ(v.code, kValidationFailure);
  EXPECT_TRUE(has(v.out, "degree homogeneity")) << v.out;

  auto garbage = writeTemp("garbage.json", "{not json");
  EXPECT_EQ(run({"validate", garbage}).code, kFormatError);
  EXPECT_EQ(run({"separable", "--demo", "no-such-demo"}).code, kFormatError);
  EXPECT_EQ(run({"separable"}).code, kFormatError);
  EXPECT_EQ(run({"frobnicate"}).code, kFormatError);
  EXPECT_EQ(run({"cycles", "--demo", "acyclic-division", "F5", "w=0", "--window", "0", "0"}).code,
            kWindowInsufficient);
  EXPECT_EQ(run({"grdiv-classify", "--demo", "twisted-laurent", "F4"}).code, kValidationFailure);
}

TEST(Cli, DemoListingAndExport) {
  auto names = listDemos();
  auto contains = [&](const std::string& n) {
    for (const auto& e : names)
      if (e.name == n) return true;
    return false;
  };
  EXPECT_TRUE(contains("dual-numbers-over-Q"));
  EXPECT_TRUE(contains("laurent F_p n"));
  EXPECT_TRUE(contains("acyclic-division F_p w=Xinv"));

  auto listing = run({"demo"});
  EXPECT_EQ(listing.code, kDecisionCompleted);
  EXPECT_TRUE(has(listing.out, "dual-numbers-over-Q"));

  auto exported = run({"demo", "--demo", "laurent", "F2", "3"});
  ASSERT_EQ(exported.code, kDecisionCompleted);
  auto file = writeTemp("laurent.json", exported.out);
  auto again = run({"separable", file});
  EXPECT_EQ(again.code, kDecisionCompleted);
  EXPECT_TRUE(has(again.out, "verdict: SEPARABLE")) << again.out;
}
