#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kuroda/cli.hpp"

using namespace kuroda;

namespace {

const std::string kConcrete = std::string(KURODA_TEST_DATA) + "/concrete.json";
const std::string kSeven = std::string(KURODA_TEST_DATA) + "/seven_halves.json";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  EXPECT_EQ(r.code, expected_code) << r.err;
  return Json::parse(r.out);
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("kuroda_cli_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = temp_path(name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, ValidateConcrete) {
  const auto doc = run_json({"validate", "--config", kConcrete});
  EXPECT_EQ(doc["eq1_value"], "3/4");
  EXPECT_EQ(doc["valid"], true);
  EXPECT_EQ(doc["pair_checks"].size(), 3u);
  EXPECT_EQ(doc["Q"][0], "3");
}

TEST(Cli, ValidateInvalidConfig) {
  const auto path = write_temp("weak.json", R"({"delta": [[-1,1,1,0],[1,-1,1,0],[1,1,-1,0]], "gamma": 1})");
  const auto doc = run_json({"validate", "--config", path}, 1);
  EXPECT_EQ(doc["eq1_value"], "3/2");
  EXPECT_EQ(run({"tower", "--config", path}).code, 2);
  const auto bad = write_temp("bad.json", R"({"delta": [[1,3,3,0],[3,-1,3,0],[3,3,-1,0]], "gamma": 1})");
  const auto doc2 = run_json({"validate", "--config", bad}, 1);
  EXPECT_EQ(doc2["sign_pattern_ok"], false);
  EXPECT_TRUE(doc2["eq1_value"].is_null());
}

TEST(Cli, TowerConcrete) {
  const auto doc = run_json({"tower", "--config", kConcrete});
  EXPECT_EQ(doc["N"], Json::array({3, 3, 3}));
  EXPECT_EQ(doc["z1_equals_z2"], true);
  const auto csv = run({"tower", "--config", kConcrete, "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "axis,n,in_z1,in_z2,label");
  EXPECT_NE(csv.out.find("1,0,true,true,\"E_{1,0}\""), std::string::npos);
  const auto seven = run_json({"tower", "--config", kSeven});
  EXPECT_EQ(seven["z1_equals_z2"], false);
  EXPECT_EQ(seven["axes"][0]["J2"], Json::array({0, 1, 2, 3}));
}

TEST(Cli, Generators) {
  const auto empty = run_json({"generators", "--config", kConcrete, "--degree-bound", "0"});
  EXPECT_TRUE(empty["generators"].is_array());
  EXPECT_TRUE(empty["generators"].empty());
  const auto two = run_json({"generators", "--config", kConcrete, "--degree-bound", "2"});
  EXPECT_EQ(two["count"], 4);
  EXPECT_EQ(run({"generators", "--config", kConcrete, "--degree-bound", "-1"}).code, 2);
}

TEST(Cli, Member) {
  const auto doc = run_json({"member", "--config", kConcrete, "--expr", "(P1-P2)*(P2-P3)*(P3-P1)"});
  EXPECT_EQ(doc["in_r_star"], true);
  EXPECT_EQ(doc["in_r_oracle"], true);
  const auto no = run_json({"member", "--config", kConcrete, "--expr", "P1*P2*P3"});
  EXPECT_EQ(no["in_r_star"], false);
  EXPECT_EQ(no["agree"], true);
  EXPECT_FALSE(no["star_violations"].empty());
  EXPECT_EQ(run({"member", "--config", kConcrete, "--expr", "P1^-1"}).code, 2);
  EXPECT_EQ(run({"member", "--config", kConcrete, "--expr", "Y1"}).code, 2);
  const auto err = run({"member", "--config", kConcrete, "--expr", "P1 + Q"});
  EXPECT_EQ(err.code, 2);
  EXPECT_NE(err.err.find("column"), std::string::npos);
}

TEST(Cli, CondTriple) {
  const auto doc = run_json({"cond", "--config", kConcrete, "--r1", "1", "--r2", "0", "--r3", "0", "--axis", "1"});
  EXPECT_EQ(doc["cond1"], false);
  EXPECT_EQ(doc["cond2"], false);
  EXPECT_EQ(doc["cond3"], false);
  const auto sel = run_json({"cond", "--config", kSeven, "--r1", "7", "--r3", "2", "--which", "3"});
  EXPECT_EQ(sel["selected"], true);
  EXPECT_EQ(run({"cond", "--config", kConcrete, "--axis", "4"}).code, 2);
}

TEST(Cli, CondSweepAndExpression) {
  const auto sweep = run_json({"cond", "--config", kSeven, "--sweep", "10"});
  EXPECT_EQ(sweep["disagreements"], 0);
  EXPECT_EQ(sweep["checked"], 3 * 11 * 2 * 11);
  const auto expr = run_json({"cond", "--config", kConcrete, "--expr", "(P1-P2)*(P2-P3)*(P3-P1)"});
  EXPECT_EQ(expr["axes"].size(), 3u);
  EXPECT_EQ(expr["axes"][0]["cond2"], true);
}

TEST(Cli, Pullback) {
  const auto doc = run_json({"pullback", "--config", kConcrete, "--axis", "1"});
  EXPECT_EQ(doc["region_poles"], Json::array({0, 1, 2}));
  EXPECT_EQ(doc["region_poles_equal_z2"], true);
  const auto csv = run({"pullback", "--config", kSeven, "--r1", "7", "--r3", "2", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "n,k,r1,r3,pole");
  EXPECT_NE(csv.out.find("4,2,1,1,false"), std::string::npos);
}

TEST(Cli, ProbeIsDeterministic) {
  const std::vector<std::string> args = {"probe",     "--config", kConcrete, "--expr", "Y1*Y2", "--lambda", "2",
                                         "--samples", "2000",     "--seed",  "5",      "--format", "json"};
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto doc = Json::parse(a.out);
  EXPECT_EQ(doc["bound_ok"], true);
  EXPECT_EQ(doc["region"], "SPrime4");
  const auto pi = run_json({"probe", "--config", kConcrete, "--expr", "P1", "--samples", "200"});
  EXPECT_EQ(pi["divergence"], true);
  EXPECT_EQ(run({"probe", "--config", kConcrete, "--expr", "P1", "--region", "sprime"}).code, 2);
  EXPECT_EQ(run({"probe", "--config", kConcrete, "--expr", "P1", "--lambda", "-1"}).code, 2);
  EXPECT_EQ(run({"probe", "--config", kConcrete, "--expr", "P1", "--lambda", "1/2", "--samples", "50"}).code, 0);
}

TEST(Cli, SandwichAndCloud) {
  const auto s = run_json({"sandwich", "--config", kConcrete, "--samples", "300", "--seed", "2"});
  EXPECT_EQ(s["inner_violations"], 0);
  EXPECT_EQ(s["outer_violations"], 0);
  const auto path = temp_path("cloud.csv");
  const auto c = run({"cloud", "--config", kConcrete, "--grid", "16", "--radius", "5", "--format", "csv", "--out", path});
  EXPECT_EQ(c.code, 0) << c.err;
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "x,y,z,margin");
}

TEST(Cli, BadInput) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"tower"}).code, 2);
  EXPECT_EQ(run({"tower", "--config", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({"tower", "--config", kConcrete, "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"tower", "--config", kConcrete, "--out", "/nonexistent/dir/out.txt"}).code, 2);
  const auto notjson = write_temp("garbage.json", "{not json");
  EXPECT_EQ(run({"tower", "--config", notjson}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("validate"), std::string::npos);
}

TEST(Cli, TextFormat) {
  const auto r = run({"validate", "--config", kConcrete});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("eq1_value"), std::string::npos);
  EXPECT_NE(r.out.find("3/4"), std::string::npos);
}
