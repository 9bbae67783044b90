#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "support/fixtures.hpp"

namespace wicks::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, TableTwoRows) {
  const Result r = call({"table", "2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "1 1\n2 9\n");
}

TEST(Cli, TableFifteen) {
  const Result r = call({"table", "15"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("15 19903817294929565349602352185144632327980494486370\n"), std::string::npos);
  const Result full = call({"table", "3", "--full", "--format", "csv"});
  EXPECT_NE(full.out.find("3,1726,100,12,1,1615,99,11,1"), std::string::npos);
}

TEST(Cli, TableZeroIsUsageError) { EXPECT_EQ(call({"table", "0"}).code, kUsage); }

TEST(Cli, CountJson) {
  const Result r = call({"count", "2", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["M1"], "9");
  EXPECT_EQ(j["m1"], "35/6");
  EXPECT_EQ(j["m2_by_r"]["5"], "1/2");
  EXPECT_EQ(j["m3_by_st"]["2,1"], "1/3");
  EXPECT_EQ(j["exact_orders"]["1"], "3");
}

TEST(Cli, CountGenusOne) {
  const auto j = nlohmann::json::parse(call({"count", "1", "--format", "json"}).out);
  for (const char* key : {"M1", "M2", "M3", "M6"}) EXPECT_EQ(j[key], "1");
  EXPECT_EQ(j["m6_by_rst"]["3;0,2"], "1/6");
}

TEST(Cli, InspectExampleWord) {
  const Result r = call({"inspect", testing::kExampleWord, "--format", "json", "--flows", "--quotient"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["genus"], 2);
  EXPECT_EQ(j["maximal"], true);
  EXPECT_GE(j["aut"]["order"].get<int>(), 2);
  EXPECT_EQ(j["symmetry"][0]["r"], 1);
  EXPECT_EQ(j["flows"]["z2"], 4);
  EXPECT_EQ(j["quotients"]["involution"]["genus"], 1);
  EXPECT_EQ(j["quotients"]["involution"]["flow"]["a"], 1);
  EXPECT_EQ(j["quotients"]["involution"]["flow"]["e"], 0);
}

TEST(Cli, InspectTorusSquare) {
  const Result r = call({"inspect", "a b a' b'", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["genus"], 1);
  EXPECT_EQ(j["maximal"], false);
}

TEST(Cli, InspectRejectsCancellation) {
  const Result r = call({"inspect", "a", "b", "b'", "a'", "--format", "json"});
  EXPECT_NE(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["valid"], false);
  EXPECT_EQ(j["violations"][0]["condition"], 2);
}

TEST(Cli, InspectParseError) {
  const Result r = call({"inspect", "a a b"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, EnumerateGluings) {
  const Result r = call({"enumerate", "2", "--mode", "gluings", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  std::istringstream in(r.out);
  std::string line;
  int classes = 0;
  nlohmann::json summary;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    if (j["record"] == "class") ++classes;
    else summary = j;
  }
  EXPECT_EQ(classes, 9);
  EXPECT_EQ(summary["mass"], "35/6");
}

TEST(Cli, EnumerateIsByteStableAcrossJobs) {
  const Result a = call({"enumerate", "2", "--mode", "gluings", "--format", "csv", "--jobs", "1"});
  const Result b = call({"enumerate", "2", "--mode", "gluings", "--format", "csv", "--jobs", "3"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, EnumerateCapacity) {
  const Result r = call({"enumerate", "3", "--mode", "gluings"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("genus <= 2"), std::string::npos);
}

TEST(Cli, Verify) {
  for (const char* g : {"1", "2"}) {
    const Result r = call({"verify", g});
    EXPECT_EQ(r.code, kOk) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  }
  const Result two = call({"verify", "2", "--format", "json"});
  const auto j = nlohmann::json::parse(two.out);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(call({"verify", "4"}).code, kUsage);
}

TEST(Cli, TransformReduce) {
  const Result r = call({"transform", testing::kExampleWord, "--reduce", "0", "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["canonical"], "a1 a2 a3 a1' a2' a3'");
  EXPECT_EQ(j["result"]["genus"], 1);
}

TEST(Cli, TransformIhAndConstruct) {
  const Result ih = call({"transform", testing::kExampleWord, "--ih", "c", "--format", "json"});
  ASSERT_EQ(ih.code, kOk) << ih.err;
  EXPECT_EQ(nlohmann::json::parse(ih.out)["result"]["maximal"], true);
  const Result c = call({"transform", "x y z x' y' z'", "--construct", "--format", "json"});
  ASSERT_EQ(c.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(c.out)["classes"], 9);
  EXPECT_EQ(call({"transform", "x y z x' y' z'", "--ih", "q"}).code, kUsage);
  EXPECT_EQ(call({"transform", "x y z x' y' z'"}).code, kUsage);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "wicks_cli_output_test.txt";
  const Result r = call({"table", "3", "--output", path.string()});
  ASSERT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  EXPECT_EQ(contents.str(), "1 1\n2 9\n3 1726\n");
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace wicks::cli
