#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(JONES_VERIFY_BIN) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, SpectrumCsv) {
  const Result r = run("spectrum --n-max 6 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("n,t_re,t_im,index\n", 0), 0u);
  EXPECT_NE(r.out.find(",2.6180339887498"), std::string::npos);
}

TEST(Cli, SpectrumBelowMinimumIsUsageError) { EXPECT_EQ(run("spectrum --n-max 2").code, 2); }

TEST(Cli, SpectrumJson) {
  const Result r = run("spectrum --n-max 3 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["discrete"].size(), 1u);
  EXPECT_EQ(j["discrete"][0]["n"], 3);
}

TEST(Cli, VerifyKinds) {
  EXPECT_EQ(run("verify tl --t 1 --m 3").code, 0);
  EXPECT_EQ(run("verify tl --t root:5 --m 3").code, 0);
  EXPECT_EQ(run("verify laurent --depth 12").code, 0);
  EXPECT_EQ(run("verify chebyshev").code, 0);
  EXPECT_EQ(run("verify casimir").code, 0);
  EXPECT_EQ(run("verify bratteli --levels 10 --m 3").code, 0);
}

TEST(Cli, VerifyAuditReportsDiscrepancyAndPasses) {
  const Result r = run("verify audit --t 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("not a projection"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("verify bogus").code, 2);
  EXPECT_EQ(run("verify tl --t nonsense").code, 2);
  EXPECT_EQ(run("verify tl --format yaml").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("walkthrough --expect-fail nothing").code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run("--help").code, 0); }

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "spectrum_out.json";
  ASSERT_EQ(run("spectrum --n-max 5 --format json -o " + path).code, 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["discrete"].size(), 3u);
}

TEST(Cli, JsonReportRoundTrip) {
  const Result r = run("verify tl --t 9 --m 3 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(nlohmann::json::parse(j.dump()), j);
  EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Cli, Walkthrough) {
  const Result r = run("walkthrough");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("spectrum = {4cos²(π/n): 3 ≤ n ≤ 24} ∪ [4, ∞)"), std::string::npos);
  EXPECT_EQ(run("walkthrough --expect-fail audit-as-projection").code, 0);
  const Result j = run("walkthrough --format json");
  EXPECT_TRUE(nlohmann::json::parse(j.out)["pass"].get<bool>());
}

TEST(Cli, SizeCapFromEnvironment) {
  EXPECT_EQ(run("verify tl --t 1 --m 5").code, 0);
  const std::string cmd = "JONES_VERIFY_MAX_DIM=16 " + std::string(JONES_VERIFY_BIN) + " verify tl --t 1 --m 5 >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}
