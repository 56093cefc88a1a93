#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "curled/io.hpp"

namespace {

namespace cli = curled::cli;

const std::string kData = CURLED_TEST_DATA_DIR;
const std::string kGolden = CURLED_TEST_GOLDEN_DIR;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "curled");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  EXPECT_TRUE(in) << "missing " << path;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("curled_test_" + name)).string();
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
  EXPECT_EQ(run({"check"}).code, cli::kExitUsage);
}

TEST(Cli, CheckGoldens) {
  const CliRun zero = run({"check", kData + "/zero_gf2.json"});
  EXPECT_EQ(zero.code, cli::kExitOk);
  EXPECT_EQ(zero.out, slurp(kGolden + "/check_zero_gf2.txt"));

  const CliRun failing = run({"check", kData + "/type110_a_is_g_gf2.json"});
  EXPECT_EQ(failing.code, cli::kExitOk);  // verdicts never change the exit code
  EXPECT_EQ(failing.out, slurp(kGolden + "/check_type110_a_is_g_gf2.txt"));

  const CliRun json = run({"check", "--json", kData + "/type110_a_is_g_gf2.json"});
  EXPECT_EQ(json.code, cli::kExitOk);
  EXPECT_EQ(json.out, slurp(kGolden + "/check_type110_a_is_g_gf2.json"));

  const CliRun rational = run({"check", kData + "/rational_example.json"});
  EXPECT_EQ(rational.code, cli::kExitOk);
  EXPECT_EQ(rational.out, slurp(kGolden + "/check_rational_example.txt"));
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run({"check", kData + "/bad_type.json"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"check", kData + "/truncated.json"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"check", kData + "/missing.json"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"check", kData + "/not_prime.json"}).code, cli::kExitBadField);
  EXPECT_EQ(run({"check", kData + "/fraction_in_prime.json"}).code, cli::kExitBadField);
}

TEST(Cli, ExpandGoldens) {
  const CliRun ab = run({"expand", "--word", "AB"});
  EXPECT_EQ(ab.code, cli::kExitOk);
  EXPECT_EQ(ab.out, "AB : a^2vw | abuw | a^2vw - abuw\n");
  EXPECT_EQ(run({"expand", "--word", "e"}).out, "e : a^2u^2i | a^2u^2i | 0\n");
  EXPECT_EQ(run({"expand", "--word", "A^2"}).out, run({"expand", "--word", "AA"}).out);
  const CliRun all = run({"expand", "--all"});
  EXPECT_EQ(all.code, cli::kExitOk);
  EXPECT_EQ(all.out, slurp(kGolden + "/expand_all.txt"));
}

TEST(Cli, ExpandErrors) {
  EXPECT_EQ(run({"expand", "--word", "zz"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"expand"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"expand", "--all", "--word", "e"}).code, cli::kExitUsage);
}

TEST(Cli, VerifyIdentities) {
  const CliRun r = run({"verify-identities", "--skip-recombination"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.out;
  EXPECT_NE(r.out.find("ledger rows: 81\n"), std::string::npos);
  EXPECT_NE(r.out.find("Greek identities: 6/6\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("all checks passed\n"), std::string::npos);
}

TEST(Cli, VerifyTheoremSample) {
  const CliRun r = run({"verify-theorem", "--field", "3", "--types", "0,0,0", "--mode", "sample", "--n", "2000",
                     "--seed", "7", "--threads", "2"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  const auto json = nlohmann::json::parse(r.out);
  EXPECT_EQ(json["mismatch_total"], 0);
  ASSERT_EQ(json["reports"].size(), 2u);
  EXPECT_EQ(json["reports"][0]["counts"]["tables"], 2000);

  const CliRun again = run({"verify-theorem", "--field", "3", "--types", "0,0,0", "--mode", "sample", "--n", "2000",
                         "--seed", "7", "--threads", "1"});
  EXPECT_EQ(again.out, r.out);

  const CliRun curled = run({"verify-theorem", "--field", "5", "--types", "1,1,1;0,0,1", "--mode", "sample", "--n",
                          "300", "--population", "curled"});
  EXPECT_EQ(curled.code, cli::kExitOk);
  const auto cj = nlohmann::json::parse(curled.out);
  ASSERT_EQ(cj["reports"].size(), 2u);
  EXPECT_EQ(cj["reports"][0]["population"], "curled");
}

TEST(Cli, VerifyTheoremWritesFile) {
  const std::string path = temp_path("report.json");
  const CliRun r = run({"verify-theorem", "--field", "5", "--types", "0,1,0", "--n", "100", "--out", path});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("0 mismatches"), std::string::npos) << r.out;
  EXPECT_EQ(nlohmann::json::parse(slurp(path))["reports"].size(), 2u);
  std::remove(path.c_str());
}

TEST(Cli, VerifyTheoremFlagErrors) {
  EXPECT_EQ(run({"verify-theorem", "--field", "2", "--mode", "sample", "--n", "-5"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify-theorem", "--field", "4"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify-theorem", "--field", "x"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify-theorem", "--types", "1,2,0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify-theorem", "--types", "1,1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify-theorem", "--mode", "fast"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify-theorem", "--population", "none"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify-theorem", "--field", "3", "--mode", "exhaustive"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify-theorem", "--threads", "0"}).code, cli::kExitUsage);
}

TEST(Cli, Classify) {
  const CliRun r = run({"classify", "--field", "3", "--n", "200", "--seed", "1"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, curled::kCsvHeader);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_EQ(line.substr(0, 2), "3,");
  }
  EXPECT_EQ(rows, 8);
  EXPECT_EQ(run({"classify", "--field", "3", "--n", "200", "--seed", "1"}).out, r.out);

  const std::string path = temp_path("classify.csv");
  EXPECT_EQ(run({"classify", "--field", "5", "--n", "10", "--out", path}).code, cli::kExitOk);
  EXPECT_EQ(slurp(path).substr(0, std::string(curled::kCsvHeader).size()), curled::kCsvHeader);
  std::remove(path.c_str());
  EXPECT_EQ(run({"classify", "--field", "5", "--n", "10", "--out", "/nonexistent-dir/x.csv"}).code, cli::kExitUsage);
}

}  // namespace
