#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using leecodes::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("leecodes_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" + name);
}

}  // namespace

TEST(Cli, Check) {
  const auto r = call({"check", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out),
            R"({"n":5,"p":61,"p_is_prime":true,"a":23,"b":30,"solution":null,"verdict":"nonexistence_proven"})");
  EXPECT_EQ(call({"check", "5", "--json"}).out, r.out);
  EXPECT_NE(call({"check", "4"}).out.find("nonexistence_proven"), std::string::npos);
}

TEST(Cli, Scan) {
  const auto r = call({"scan", "1000"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n1000,225,222\n"), std::string::npos);
  EXPECT_EQ(first_line(r.out), "threshold,prime_count,applicable_count");
  const auto custom = call({"scan", "100", "--thresholds", "10,50"});
  EXPECT_NE(custom.out.find("10,6,4\n"), std::string::npos);
  EXPECT_EQ(call({"scan", "100", "--thresholds", "50,10"}).code, 1);
}

TEST(Cli, ScanPerN) {
  const auto path = temp_file("per_n.jsonl");
  ASSERT_EQ(call({"scan", "20", "--per-n", path.string()}).code, 0);
  std::ifstream in(path);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    EXPECT_EQ(line.rfind("{\"n\":" + std::to_string(lines) + ",", 0), 0u) << line;
  }
  EXPECT_EQ(lines, 20u);
  fs::remove(path);
}

TEST(Cli, Sphere) {
  EXPECT_EQ(first_line(call({"sphere", "5", "2", "--count-only"}).out), "61");
  const auto pts = call({"sphere", "1", "1", "--q", "3"});
  EXPECT_EQ(pts.code, 0);
  EXPECT_EQ(pts.out, "0\n1\n2\n");
  EXPECT_EQ(call({"sphere", "2", "2", "--q", "4"}).code, 1);
}

TEST(Cli, ConstructAndVerify) {
  const auto path = temp_file("gw2.json");
  const auto c = call({"construct", "gw2", "2", "--out", path.string()});
  ASSERT_EQ(c.code, 0);
  EXPECT_TRUE(c.out.empty());
  const auto v = call({"verify", path.string()});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(first_line(v.out), R"({"status":"perfect","witness":null})");

  std::ofstream(path) << R"({"n":2,"e":2,"q":13,"repr":{"type":"centers","points":[[0,0],[1,0]]}})";
  EXPECT_NE(call({"verify", path.string()}).out.find("not_packing"), std::string::npos);
  fs::remove(path);

  EXPECT_EQ(call({"construct", "gw9", "2"}).code, 1);
  EXPECT_EQ(call({"verify", "/nonexistent/code.json"}).code, 1);
}

TEST(Cli, VerifyGuardExitsTwo) {
  const auto path = temp_file("big.json");
  std::ofstream(path) << R"({"n":12,"e":2,"q":313,"repr":{"type":"homomorphism","p":313,"x":[1,2,3,4,5,6,7,8,9,10,11,12]}})";
  const auto r = call({"verify", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
  fs::remove(path);
}

TEST(Cli, SearchWitness) {
  EXPECT_EQ(first_line(call({"search-witness", "2", "--all"}).out), R"({"witnesses":[[1,5]],"exhausted":true,"nodes":2})");
  const auto five = call({"search-witness", "5"});
  EXPECT_EQ(five.code, 0);
  EXPECT_NE(five.out.find(R"("witnesses":[],"exhausted":true)"), std::string::npos);
  EXPECT_NE(call({"search-witness", "5", "--node-limit", "3"}).out.find(R"("exhausted":false)"), std::string::npos);
  EXPECT_EQ(call({"search-witness", "3"}).code, 1);
}

TEST(Cli, VerifyWitness) {
  const auto good = call({"verify-witness", "2", "1,5"});
  EXPECT_EQ(good.code, 0);
  EXPECT_EQ(first_line(good.out).rfind(R"({"bijective":true,)", 0), 0u);
  const auto bad = call({"verify-witness", "2", "1,4"});
  EXPECT_EQ(bad.code, 0);
  EXPECT_EQ(first_line(bad.out).rfind(R"({"bijective":false,)", 0), 0u);
  EXPECT_EQ(call({"verify-witness", "2", "1,5,7"}).code, 1);
  EXPECT_EQ(call({"verify-witness", "2", "1,x"}).code, 1);
}

TEST(Cli, UsageErrors) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{}, {"frobnicate"}, {"check"}, {"check", "0"}, {"check", "5", "--bogus"},
        {"scan", "-3"}, {"search-witness", "2", "--threads", "0"}}) {
    const auto r = call(args);
    EXPECT_EQ(r.code, 1) << (args.empty() ? "" : args[0]);
    EXPECT_TRUE(r.out.empty());
  }
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"scan", "3000"}, {"check", "1000"}, {"search-witness", "7", "--all"},
        {"sphere", "3", "2"}}) {
    EXPECT_EQ(call(args).out, call(args).out);
  }
  EXPECT_EQ(call({"scan", "3000", "--threads", "4"}).out, call({"scan", "3000"}).out);
  EXPECT_EQ(call({"search-witness", "7", "--all", "--threads", "3"}).out, call({"search-witness", "7", "--all"}).out);
}
