#include "kmw_cli/cli.hpp"

#include "kmw/weight.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "kmw");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = kmw::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("kmw-cli-test-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GkoExample) {
  const auto r = run({"gko", "A1~", "--lhs", "1,1;0", "--rhs", "1,1;0", "--nu", "2,2;0", "--no-cache"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_EQ(doc["central_charge"], "1");
  EXPECT_EQ(doc["l0"], "1/24");
  EXPECT_EQ(doc["rule"], "AllShiftsPresent");
}

TEST_F(Cli, VerticesExample) {
  const auto r = run({"vertices", "A1~", "--lambda", "2,2;0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  ASSERT_EQ(doc["vertices"].size(), 3u);
  EXPECT_EQ(doc["vertices"][0]["vertex"], "2,2;0");
  EXPECT_EQ(doc["ray"], "0,0;-1");
}

TEST_F(Cli, VerifyExitCodes) {
  const auto ok = run({"verify", "A1~", "--depth", "2", "--cache-dir", dir_.string()});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_TRUE(json::parse(ok.out)["passed"].get<bool>());
  const auto bad = run({"verify", "A1~", "--depth", "2", "--no-cache", "--corrupt", "1,1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_FALSE(json::parse(bad.out)["counterexamples"].empty());
}

TEST_F(Cli, VerifyVariants) {
  EXPECT_EQ(run({"verify", "A1~", "--saturation", "2", "--depth", "1", "--no-cache"}).code, 0);
  EXPECT_EQ(run({"verify", "A1~", "--delta-strings", "--depth", "2", "--no-cache", "-o", "table"}).code, 0);
  EXPECT_EQ(run({"verify", "C2~", "--no-cache", "--threads", "2", "-o", "csv"}).code, 0);
}

TEST_F(Cli, CachedAndUncachedOutputsAgree) {
  const std::vector<std::vector<std::string>> commands{
      {"char", "A2~", "--lambda", "1,1,1;0", "--depth", "2"},
      {"tensor", "C2~", "--lhs", "1,1,1;0", "--rhs", "1,1,1;0", "--depth", "1"},
      {"verify", "A1~", "--depth", "2", "--no-timing"},
  };
  for (auto cmd : commands) {
    auto uncached = cmd;
    uncached.push_back("--no-cache");
    auto cached = cmd;
    cached.insert(cached.end(), {"--cache-dir", dir_.string()});
    const auto a = run(uncached);
    const auto b = run(cached);  // populates the cache
    const auto c = run(cached);  // reads it back
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out) << cmd[0];
    EXPECT_EQ(a.out, c.out) << cmd[0];
  }
  EXPECT_FALSE(fs::is_empty(dir_));
}

TEST_F(Cli, ReadOnlyCacheLeavesDirectoryAlone) {
  const auto r = run({"char", "A1~", "--lambda", "1,0;0", "--depth", "3", "--cache-dir", dir_.string(),
                      "--cache-readonly"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(fs::exists(dir_));
}

TEST_F(Cli, EnvironmentSelectsCacheDirectory) {
  setenv("KMW_CACHE_DIR", dir_.string().c_str(), 1);
  const auto r = run({"char", "A1~", "--lambda", "1,0;0", "--depth", "2"});
  unsetenv("KMW_CACHE_DIR");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir_));
}

TEST_F(Cli, CharacterJsonRoundTripsWeights) {
  const auto r = run({"char", "A1~", "--lambda", "1,0;0", "--depth", "5", "--no-cache"});
  ASSERT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  const auto a1 = kmw::cartan_data(kmw::AffineType::parse("A1~"));
  std::vector<std::string> string_function;
  for (const auto& e : doc["entries"]) {
    if (e["coords"][0] == e["coords"][1]) string_function.push_back(e["multiplicity"]);
    const std::string w = e["weight"];
    EXPECT_EQ(kmw::to_string(kmw::parse_weight(a1, w)), w);
  }
  EXPECT_EQ(string_function, (std::vector<std::string>{"1", "1", "2", "3", "5", "7"}));
  const auto g = run({"gko", "A1~", "--lhs", "2,2;-1", "--rhs", "1,1;0", "--nu", "3,3;-1"});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_EQ(json::parse(g.out)["lhs"], "2,2;-1");
}

TEST_F(Cli, UsageErrorsNameTheToken) {
  const auto bad_type = run({"cartan", "Q7~"});
  EXPECT_EQ(bad_type.code, 2);
  EXPECT_NE(bad_type.err.find("Q7~"), std::string::npos);
  const auto bad_weight = run({"vertices", "A1~", "--lambda", "2,x;0"});
  EXPECT_EQ(bad_weight.code, 2);
  EXPECT_NE(bad_weight.err.find("2,x;0"), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"char", "A1~", "--lambda", "1,0;0"}).code, 2);
  EXPECT_EQ(run({"verify", "A1~", "--output", "yaml"}).code, 2);
  EXPECT_EQ(run({"vertices", "A1~", "--lambda", "1,0;0"}).code, 2);
}

TEST_F(Cli, OutputFormats) {
  const auto table = run({"cartan", "G2~", "-o", "table"});
  EXPECT_EQ(table.code, 0);
  EXPECT_NE(table.out.find("1/3"), std::string::npos);
  const auto csv = run({"maximal", "A1~", "--lambda", "2,2;0", "--output", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out, "weight,coords,grade\n\"2,2;0\",\"0,0\",0\n\"4,0;0\",\"0,1\",0\n\"0,4;-1\",\"1,0\",1\n");
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("verify"), std::string::npos);
}

TEST_F(Cli, CartanJson) {
  const auto r = run({"cartan", "B2~"});
  ASSERT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["type"], "C2~");
  EXPECT_EQ(doc["dual_coxeter"], 3);
  EXPECT_EQ(doc["dim_finite"], 10);
}
