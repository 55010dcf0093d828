#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ribbonforge/cli.hpp"
#include "ribbonforge/error.hpp"

using namespace ribbonforge;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "ribbonforge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), {}};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("ribbonforge-test-" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Cli, ParseRange) {
  EXPECT_EQ(parse_range("2..4").lo, 2);
  EXPECT_EQ(parse_range("2..4").hi, 4);
  EXPECT_EQ(parse_range("3").hi, 3);
  EXPECT_THROW(parse_range("4..2"), UsageError);
  EXPECT_THROW(parse_range("a..b"), UsageError);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "radford", "2", "2"}).code, 0);
  EXPECT_EQ(run({"verify", "taft", "3"}).code, 0);
  const CliRun bad = run({"verify", "radford", "1", "3"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("m >= 2"), std::string::npos);
  EXPECT_EQ(run({"verify", "radford", "2"}).code, 2);
  EXPECT_EQ(run({"verify", "cyclic", "2", "3"}).code, 2);
  EXPECT_EQ(run({"verify", "radford", "2", "3", "--depth", "deep"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, VerifyJsonReport) {
  const fs::path dir = scratch_dir("verify");
  const CliRun r = run({"verify", "radford", "2", "1", "--depth", "full", "--format", "json", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "ribbonforge-report-v1");
  EXPECT_EQ(j["failures"], 0);
  EXPECT_EQ(slurp(dir / "radford-2-1-verify.json"), r.out);
  fs::remove_all(dir);
}

TEST(Cli, RibbonCounts) {
  EXPECT_NE(run({"ribbon", "2", "3"}).out.find("ribbon elements: 2"), std::string::npos);
  EXPECT_NE(run({"ribbon", "2", "2"}).out.find("quasi-ribbon elements: 0"), std::string::npos);
  EXPECT_NE(run({"ribbon", "3", "3"}).out.find("ribbon elements: 1"), std::string::npos);
  const CliRun taft = run({"ribbon", "taft", "3"});
  EXPECT_EQ(taft.code, 0);
  EXPECT_NE(taft.out.find("ribbon elements: 1"), std::string::npos);
  const CliRun big = run({"ribbon", "4", "4"});
  EXPECT_EQ(big.code, 2);
  EXPECT_NE(big.err.find("dim 4096 exceeds budget"), std::string::npos);
}

TEST(Cli, RibbonReportsAreByteIdentical) {
  const CliRun a = run({"ribbon", "2", "3", "--format", "json"});
  const CliRun b = run({"ribbon", "2", "3", "--format", "json"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["counts"]["ribbon"], 2);
  EXPECT_EQ(j["square_roots"]["monomial"].size(), 4u);
  auto as_set = [](const nlohmann::json& arr) {
    std::vector<std::string> out;
    for (const auto& e : arr) out.push_back(e.dump());
    std::sort(out.begin(), out.end());
    return out;
  };
  EXPECT_EQ(as_set(j["ribbon_elements"]), as_set(j["explicit_ribbon_elements"]));
}

TEST(Cli, SweepCachesAndForces) {
  const fs::path dir = scratch_dir("sweep");
  const CliRun first = run({"sweep", "--m", "2..3", "--n", "1..3", "--out", dir.string()});
  ASSERT_EQ(first.code, 0) << first.out << first.err;
  EXPECT_NE(first.out.find("parity law holds"), std::string::npos);
  const std::string report = slurp(dir / "radford-2-3.json");
  const std::string index = slurp(dir / "index.json");

  const CliRun second = run({"sweep", "--m", "2..3", "--n", "1..3", "--out", dir.string()});
  EXPECT_EQ(second.code, 0);
  std::istringstream lines(second.out);
  int cached = 0;
  for (std::string line; std::getline(lines, line);) cached += line.find(": cached,") != std::string::npos;
  EXPECT_EQ(cached, 6);
  EXPECT_EQ(slurp(dir / "index.json"), index);

  const CliRun forced = run({"sweep", "--m", "2..3", "--n", "1..3", "--out", dir.string(), "--force"});
  EXPECT_EQ(forced.out.find("cached"), std::string::npos);
  EXPECT_EQ(slurp(dir / "radford-2-3.json"), report);

  // A damaged report is recomputed rather than trusted.
  std::ofstream(dir / "radford-3-3.json") << "{ not json";
  const CliRun repaired = run({"sweep", "--m", "3", "--n", "3", "--out", dir.string()});
  EXPECT_NE(repaired.out.find("radford(3,3): computed"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, SweepSkipsOverBudget) {
  const fs::path dir = scratch_dir("budget");
  const CliRun r = run({"sweep", "--m", "4", "--n", "4", "--out", dir.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("skipped: dim 4096 exceeds budget"), std::string::npos);
  const auto index = nlohmann::json::parse(slurp(dir / "index.json"));
  EXPECT_EQ(index["cells"][0]["status"], "skipped: dim 4096 exceeds budget");
  fs::remove_all(dir);
}
