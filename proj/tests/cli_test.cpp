#include "firreg/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

auto invoke(std::vector<std::string> args) -> Result {
  args.insert(args.begin(), "firreg");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = firreg::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

auto temp_path(const std::string &name) -> std::string {
  return (std::filesystem::temp_directory_path() / ("firreg_cli_test_" + name)).string();
}

TEST(Cli, MinL) {
  const auto r = invoke({"min-l", "--n", "3", "--t", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["min_l"], 15);
  EXPECT_EQ(j["report"]["holds"], true);
  EXPECT_EQ(j["report"]["branch"], "t=1");
}

TEST(Cli, MinLMarginForC4) {
  const auto j = json::parse(invoke({"min-l", "--n", "4", "--t", "2"}).out);
  EXPECT_EQ(j["min_l"], 52);
  EXPECT_EQ(j["report"]["decisive"]["lhs"], "1225");
  EXPECT_EQ(j["report"]["decisive"]["rhs"], "1224");
}

TEST(Cli, FdegOnTriangleFile) {
  const std::string path = temp_path("K3.g6");
  std::ofstream(path) << "Bw\n";
  const auto r = invoke({"fdeg", "--pattern", "P3", "--host", path, "--oracle-check"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j, json::parse(R"({"1":"3","2":"3","3":"3"})"));
  std::filesystem::remove(path);
}

TEST(Cli, FdegInducedAndConstructedHost) {
  const auto r = invoke({"fdeg", "--pattern", "P3", "--construct", "F2l", "--auto-l", "--induced"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["noninduced"].size(), 30U);
  EXPECT_EQ(j["induced"].size(), 30U);
}

TEST(Cli, CertifyP3) {
  const auto r = invoke({"certify", "--pattern", "P3", "--auto-l"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["overall"], true);
  EXPECT_EQ(j["params"]["l"], 15);
}

TEST(Cli, CertifyHostWithCollisionExitsOne) {
  const auto r = invoke({"certify", "--pattern", "P3", "--host", "K3"});
  EXPECT_EQ(r.code, 1);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["overall"], false);
  EXPECT_EQ(j["collisions"].size(), 3U);
  EXPECT_EQ(j["collisions"][0]["u"], 1);
}

TEST(Cli, ConstructWritesGraph6AndLabels) {
  const std::string g6 = temp_path("x.g6");
  const std::string labels = temp_path("x.json");
  const auto r = invoke({"construct", "--graph", "X", "--pattern", "C4", "--l", "52", "-o", g6, "--labels", labels});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(g6);
  const auto graphs = firreg::read_graph6_stream(in);
  ASSERT_EQ(graphs.size(), 1U);
  EXPECT_EQ(graphs[0].order(), 54U);
  const auto j = json::parse(std::ifstream(labels));
  EXPECT_EQ(j["labels"].back(), 104);
  EXPECT_EQ(j["labels"][52], 53);
  std::filesystem::remove(g6);
  std::filesystem::remove(labels);
}

TEST(Cli, ConstructA) {
  const auto r = invoke({"construct", "--graph", "A", "--l", "15"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(firreg::parse_graph6(r.out).order(), 29U);
}

TEST(Cli, SubcommandsProduceIdenticalOutput) {
  for (const auto &args : std::vector<std::vector<std::string>>{
           {"search-p3", "--order", "7", "--mode", "random", "--seed", "9", "--budget", "5000"},
           {"fdeg", "--pattern", "C4", "--construct", "F2l", "--auto-l", "--workers", "3"},
           {"hyper", "--host", "C5", "--n", "4"},
           {"oracle-check", "--pairs", "20", "--seed", "3"}}) {
    const auto a = invoke(args);
    const auto b = invoke(args);
    EXPECT_EQ(a.out, b.out) << args.front();
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(Cli, HyperVerdictAndAtlasExport) {
  const std::string atlas = temp_path("atlas.g6");
  const auto r = invoke({"hyper", "--host", "C5", "--n", "3", "--atlas-out", atlas});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out)["hyper_irregular"], false);
  std::ifstream in(atlas);
  EXPECT_EQ(firreg::read_graph6_stream(in).size(), 2U);
  std::filesystem::remove(atlas);
}

TEST(Cli, OracleCheckPasses) {
  const auto r = invoke({"oracle-check", "--pairs", "30", "--seed", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["ok"], true);
}

TEST(Cli, LemmaAndFloorSubcommands) {
  EXPECT_EQ(invoke({"verify-lemmas", "--pattern", "P3", "--auto-l"}).code, 0);
  const auto f = invoke({"floor-diagram", "--pattern", "P3", "--l", "16"});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(json::parse(f.out)["floors"].size(), 16U);
  EXPECT_EQ(invoke({"remark1", "--patterns", "P3", "--auto-l"}).code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({"certify", "--pattern", "P3", "--l", "15", "--auto-l"}).code, 2);
  EXPECT_EQ(invoke({"certify", "--pattern", "P3"}).code, 2);
  EXPECT_EQ(invoke({"certify", "--pattern", "K3", "--auto-l"}).code, 2);  // diameter 1
  EXPECT_EQ(invoke({"search-p3", "--order", "5"}).code, 2);
  EXPECT_EQ(invoke({"search-p3", "--order", "6", "--mode", "sideways"}).code, 2);
  EXPECT_EQ(invoke({"remark1", "--patterns", "C4,paw", "--auto-l"}).code, 2);
  EXPECT_EQ(invoke({"fdeg", "--pattern", "P3", "--host", "K3", "--construct", "A", "--l", "4"}).code, 2);
}

TEST(Cli, BadGraph6NamesTheToken) {
  const auto r = invoke({"fdeg", "--pattern", "P3", "--host", "B~~"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("B~~"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("certify"), std::string::npos);
}

}  // namespace
