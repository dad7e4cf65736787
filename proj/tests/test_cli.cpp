#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "solvspec/cli.hpp"
#include "test_support.hpp"

namespace solvspec {
namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

TEST(Cli, TablesMatchGoldenFiles) {
  for (std::string c : {"3,1", "3,2", "5,1", "5,2", "5,3"}) {
    CliResult r = run({"table", c, "--format", "tsv"});
    EXPECT_EQ(r.code, 0) << c << "\n" << r.out;
    std::string name = c;
    name[1] = '_';
    EXPECT_EQ(r.out, slurp(std::string(SOLVSPEC_TEST_DIR) + "/golden/table_" + name + ".tsv")) << c;
  }
}

TEST(Cli, TableRowsCarryNoMismatches) {
  for (auto [h, e] : {std::pair{3u, 1u}, {3u, 2u}, {5u, 1u}, {5u, 2u}, {5u, 3u}})
    for (auto& row : emit_table(testing::catalog(), h, e)) EXPECT_TRUE(row.mismatches.empty()) << row.family;
}

TEST(Cli, UnknownCaseIsAnError) {
  CliResult r = run({"table", "4,1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("UnknownCase"), std::string::npos);
}

TEST(Cli, SeFindsIdentityBetweenEqualSpectra) {
  CliResult r = run({"se", "--family", "s_{5,1}^{0,1}", "--family", "s_{5,1}^{0,4}", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["equivalent"].get<bool>());
  for (size_t i = 0; i < 6; ++i)
    for (size_t k = 0; k < 6; ++k) EXPECT_EQ(j["B"][i][k], i == k ? "1" : "0");
}

TEST(Cli, SeRefutationExitsOne) {
  CliResult r = run({"se", "--family", "s_{3,1}^{0,1}", "--family", "s_{3,1}^{0,2}"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "not equivalent\n");
}

TEST(Cli, RigidityVerdicts) {
  CliResult r = run({"rigidity", "s_{5,2}^{1,1}"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict\tnot-rigid"), std::string::npos) << r.out;
  r = run({"rigidity", "s_{3,1}^{1,1}"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict\trigid"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("excluded\t{0, 1/3, 1}"), std::string::npos) << r.out;
}

TEST(Cli, KWithBindings) {
  EXPECT_EQ(run({"k", "--family", "s_{3,1}^{1,1}", "-p", "b=1/3"}).out, "3\n");
  EXPECT_EQ(run({"k", "s_{3,1}^{1,1}@b=0"}).out, "2\n");
  EXPECT_EQ(run({"k", "s_{3,1}^{1,1}@b=5"}).out, "4\n");
  CliResult r = run({"k", "s_{3,1}^{1,1}"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("UnboundSymbol"), std::string::npos);
}

TEST(Cli, SemOnMatrices) {
  CliResult r = run({"sem", "--matrix", "[[1,0,0],[0,-1,0],[0,0,0]]", "--matrix", "[[1,1,0],[0,-1,0],[0,0,0]]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "equivalent alpha = 1\n");
  r = run({"sem", "--matrix", "[[1,0],[0,2]]", "--matrix", "[[2,0],[0,3]]"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(run({"sem", "--matrix", "[[1,0],[0,2]]"}).code, 2);
}

TEST(Cli, FactorSymbolicFamily) {
  CliResult r = run({"factor", "s_{3,1}^{1,1}"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "z0*(z0 + 2*b*z4)*(z0 + (1 - b)*z4)*(z0 + (1 + b)*z4)\n");
}

TEST(Cli, SchemaErrorNamesFileAndPointer) {
  auto path = std::filesystem::temp_directory_path() / "solvspec_bad_algebra.json";
  std::ofstream(path) << R"({"dim": 3, "basis": ["x", "y", "z"],
    "brackets": [{"i": 0, "j": 1, "out": {"2": "1"}}, {"i": 0, "j": 2, "out": {"2": "1"}},
                 {"i": "q", "j": 2, "out": {"1": "1"}}]})";
  CliResult r = run({"validate", "--algebra", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(path.string()), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("/brackets/2/i"), std::string::npos) << r.err;
  std::filesystem::remove(path);
}

TEST(Cli, ValidateExitCodes) {
  EXPECT_EQ(run({"validate", "s_{5,2}^{2,1}"}).code, 0);
  auto path = std::filesystem::temp_directory_path() / "solvspec_jacobi.json";
  std::ofstream(path) << R"({"dim": 3, "basis": ["x", "y", "z"],
    "brackets": [{"i": 0, "j": 1, "out": {"0": "1"}}, {"i": 1, "j": 2, "out": {"1": "1"}},
                 {"i": 0, "j": 2, "out": {"2": "1"}}]})";
  CliResult r = run({"validate", "--algebra", path.string()});
  EXPECT_EQ(r.code, 1) << r.out << r.err;
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"k"}).code, 2);
  EXPECT_EQ(run({"k", "--family", "s_{9,9}^{0,1}"}).code, 2);
  EXPECT_EQ(run({"table", "five"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, BoundsExitCodeFollowsChecks) {
  EXPECT_EQ(run({"bounds", "s_{3,1}^{1,1}@b=2"}).code, 0);
  EXPECT_EQ(run({"bounds", "s_{5,3}^{0,1}"}).code, 1);
}

TEST(Cli, CatalogVerify) {
  CliResult r = run({"catalog", "--verify"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("s_{5,3}^{0,1}"), std::string::npos);
}

}  // namespace
}  // namespace solvspec
