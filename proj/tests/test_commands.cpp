#include <gtest/gtest.h>

#include <sstream>

#include "jones/commands.hpp"

using namespace jones;

namespace {

struct CmdResult {
  int code;
  std::string out;
  std::string err;
};

CmdResult verify(VerifyOptions opt) {
  std::ostringstream out, err;
  const int code = cmd_verify(opt, out, err);
  return {code, out.str(), err.str()};
}

VerifyOptions kind(const std::string& k) {
  VerifyOptions opt;
  opt.kind = k;
  return opt;
}

}  // namespace

TEST(Commands, ParseFormat) {
  EXPECT_EQ(parse_format("json"), Format::json);
  EXPECT_EQ(parse_format("csv"), Format::csv);
  EXPECT_EQ(parse_format("table"), Format::table);
  EXPECT_THROW(parse_format("xml"), ParseError);
}

TEST(Commands, SpectrumCsvAndUsage) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_spectrum({6, Format::csv}, out, err), kExitOk);
  EXPECT_EQ(out.str().rfind("n,t_re,t_im,index\n3,", 0), 0u);
  std::ostringstream out2, err2;
  EXPECT_EQ(cmd_spectrum({2, Format::table}, out2, err2), kExitUsage);
  EXPECT_FALSE(err2.str().empty());
}

TEST(Commands, SpectrumJsonSingleEntry) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_spectrum({3, Format::json}, out, err), kExitOk);
  const auto j = nlohmann::json::parse(out.str());
  ASSERT_EQ(j["discrete"].size(), 1u);
  EXPECT_EQ(j["discrete"][0]["n"], 3);
  EXPECT_NEAR(j["discrete"][0]["index"].get<double>(), 1.0, 1e-12);
}

TEST(Commands, VerifyTl) {
  auto opt = kind("tl");
  opt.t = "1";
  opt.format = Format::json;
  const CmdResult r = verify(opt);
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("relation"));
    EXPECT_EQ(c["max_dev"], "0");
  }
}

TEST(Commands, VerifyTlComplex) {
  auto opt = kind("tl");
  opt.t = "root:7";
  opt.m = 4;
  EXPECT_EQ(verify(opt).code, kExitOk);
}

TEST(Commands, VerifyLaurent) {
  const CmdResult r = verify(kind("laurent"));
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("12/12 mutation steps Laurent"), std::string::npos);
  EXPECT_NE(r.out.find("1, 1, 2, 5, 13, 34, 89, 233"), std::string::npos);
}

TEST(Commands, VerifyLaurentCustomPath) {
  auto opt = kind("laurent");
  opt.path = "2,1,2";
  EXPECT_EQ(verify(opt).code, kExitOk);
  opt.path = "1,x";
  EXPECT_EQ(verify(opt).code, kExitUsage);
  opt.path = "1,3";
  EXPECT_EQ(verify(opt).code, kExitUsage);
}

TEST(Commands, VerifyLaurentCustomSeedFailure) {
  const std::string path = ::testing::TempDir() + "bad_seed.json";
  {
    std::ofstream f(path);
    f << R"({"rank": 1, "B": [[0]], "cluster": ["x1 + 1"]})";
  }
  auto opt = kind("laurent");
  opt.seed_file = path;
  opt.depth = 2;
  const CmdResult r = verify(opt);
  EXPECT_EQ(r.code, kExitFailed);
  opt.seed_file = ::testing::TempDir() + "missing_seed.json";
  EXPECT_EQ(verify(opt).code, kExitUsage);
}

TEST(Commands, VerifyChebyshevCasimirBratteli) {
  EXPECT_EQ(verify(kind("chebyshev")).code, kExitOk);
  EXPECT_EQ(verify(kind("casimir")).code, kExitOk);
  EXPECT_EQ(verify(kind("bratteli")).code, kExitOk);
  auto one = kind("casimir");
  one.t = "root:5";
  one.format = Format::json;
  const CmdResult r = verify(one);
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["data"].size(), 1u);
  EXPECT_NEAR(j["data"][0]["casimir"][0].get<double>(), 0.30901699437494745, 1e-10);
}

TEST(Commands, VerifyAudit) {
  auto opt = kind("audit");
  opt.format = Format::json;
  const CmdResult r = verify(opt);
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out.substr(0, r.out.rfind('}') + 1));
  EXPECT_EQ(j["data"]["printed_dev"], "1/2");
  EXPECT_EQ(j["data"]["printed_diagonal_dev"], "1/4");
  EXPECT_EQ(j["data"]["corrected_dev"], "0");
}

TEST(Commands, VerifyCsv) {
  auto opt = kind("tl");
  opt.format = Format::csv;
  const CmdResult r = verify(opt);
  EXPECT_EQ(r.out.rfind("check,pass,max_dev\n", 0), 0u);
}

TEST(Commands, VerifyUsageErrors) {
  EXPECT_EQ(verify(kind("nope")).code, kExitUsage);
  auto bad_t = kind("tl");
  bad_t.t = "zzz";
  EXPECT_EQ(verify(bad_t).code, kExitUsage);
  auto minus_one = kind("tl");
  minus_one.t = "-1";
  EXPECT_EQ(verify(minus_one).code, kExitUsage);
  auto big = kind("tl");
  big.m = 9;
  EXPECT_EQ(verify(big).code, kExitUsage);
  auto tol = kind("tl");
  tol.tol = 0.0;
  EXPECT_EQ(verify(tol).code, kExitUsage);
  auto lambda = kind("bratteli");
  lambda.lambda = 1.5;
  EXPECT_EQ(verify(lambda).code, kExitUsage);
  auto levels = kind("bratteli");
  levels.levels = 100;
  EXPECT_EQ(verify(levels).code, kExitUsage);
}

TEST(Commands, Walkthrough) {
  const WalkthroughResult w = run_walkthrough();
  EXPECT_TRUE(w.passed());
  EXPECT_EQ(w.summary(), "spectrum = {4cos²(π/n): 3 ≤ n ≤ 24} ∪ [4, ∞)");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_walkthrough({}, out, err), kExitOk);
  const std::string text = out.str();
  EXPECT_EQ(text.substr(text.rfind('\n', text.size() - 2) + 1), w.summary() + "\n");
}

TEST(Commands, WalkthroughInjectedFault) {
  const WalkthroughResult w = run_walkthrough(std::string("audit-as-projection"));
  EXPECT_TRUE(w.passed());
  const Stage& tl = w.stages.back();
  EXPECT_EQ(tl.name, "tl_towers");
  EXPECT_TRUE(tl.expected_failure);
  EXPECT_FALSE(tl.report.passed());
  WalkthroughOptions opt;
  opt.expect_fail = "something-else";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_walkthrough(opt, out, err), kExitUsage);
}

TEST(Commands, WalkthroughJson) {
  WalkthroughOptions opt;
  opt.format = Format::json;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_walkthrough(opt, out, err), kExitOk);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["stages"].size(), 7u);
  opt.format = Format::csv;
  EXPECT_EQ(cmd_walkthrough(opt, out, err), kExitUsage);
}
