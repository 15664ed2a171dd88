#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tpsi/bbm.hpp"
#include "tpsi/cli.hpp"

namespace tpsi::cli {
namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tpsi");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::ordered_json without_time(const std::string& text) {
  auto j = nlohmann::ordered_json::parse(text);
  j.erase("wall_time_s");
  return j;
}

TEST(Cli, FermatSuitePasses) {
  const Outcome o = invoke({"--suite", "fermat", "--n", "3", "--seed", "1"});
  EXPECT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["N"], 3);
  EXPECT_EQ(j["seed"], 1);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_TRUE(j.contains("wall_time_s"));
}

TEST(Cli, PlanarDualPasses) {
  const Outcome o = invoke({"--suite", "planar-dual", "--n", "5"});
  EXPECT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["identities"].size(), 4u);
  EXPECT_EQ(j["planar_geometry"]["trihedra"].size(), 4u);
}

TEST(Cli, VertexSuiteReportsGeometry) {
  const Outcome o = invoke({"--suite", "vertex-te", "--n", "2", "--seed", "4"});
  EXPECT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["geometry"]["theta"].size(), 6u);
  EXPECT_EQ(j["geometry"]["trihedra"].size(), 4u);
  EXPECT_EQ(j["geometry"]["trihedra"][0]["beta"].size(), 4u);
  EXPECT_EQ(j["identities"][0]["report"]["mode"], "full-sweep");
  EXPECT_TRUE(j["controls"][0]["detected"].get<bool>());
}

TEST(Cli, ExplicitAngles) {
  // Dihedral angles of a regular tetrahedron.
  std::ostringstream rad, deg;
  rad.precision(17);
  deg.precision(17);
  rad << std::acos(1.0 / 3.0);
  deg << std::acos(1.0 / 3.0) * 180.0 / std::acos(-1.0);
  const std::string r = rad.str(), d = deg.str();
  const Outcome o = invoke({"--suite", "vertex-te", "--n", "2", "--angles", r, r, r, r, r, r});
  EXPECT_EQ(o.code, 0) << o.out << o.err;
  EXPECT_EQ(invoke({"--suite", "irc-te", "--n", "2", "--degrees", "--angles", d, d, d, d, d, d}).code, 0);
}

TEST(Cli, DegenerateAnglesExitThree) {
  const Outcome o = invoke({"--suite", "vertex-te", "--n", "2", "--degrees", "--angles", "90", "90", "90", "90",
                            "90", "0"});
  EXPECT_EQ(o.code, 3);
  EXPECT_TRUE(nlohmann::json::parse(o.out).contains("error"));
}

TEST(Cli, NonTetrahedralAnglesExitThree) {
  const Outcome o = invoke({"--suite", "vertex-te", "--n", "2", "--degrees", "--angles", "70", "70", "70", "70",
                            "70", "70"});
  EXPECT_EQ(o.code, 3);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({"--suite", "nonsense"}).code, 2);
  EXPECT_EQ(invoke({"--n", "1"}).code, 2);
  EXPECT_EQ(invoke({"--n", "8"}).code, 2);
  EXPECT_EQ(invoke({"--tolerance", "0"}).code, 2);
  EXPECT_EQ(invoke({"--angles", "1", "2"}).code, 2);
  EXPECT_EQ(invoke({"--samples", "0"}).code, 2);
  EXPECT_EQ(invoke({"dump", "--tensor", "R"}).code, 2);
}

TEST(Cli, TinyToleranceFails) {
  const Outcome o = invoke({"--suite", "vertex-te", "--n", "2", "--tolerance", "1e-300"});
  EXPECT_EQ(o.code, 1);
}

TEST(Cli, ReportIndependentOfThreadCount) {
  const std::vector<std::string> base{"--suite", "all", "--n", "3", "--seed", "11", "--samples", "300"};
  auto with_threads = [&](const char* t) {
    auto args = base;
    args.insert(args.end(), {"--threads", t});
    const Outcome o = invoke(args);
    EXPECT_EQ(o.code, 0) << o.err;
    return without_time(o.out).dump();
  };
  const std::string one = with_threads("1");
  EXPECT_EQ(one, with_threads("3"));
  EXPECT_EQ(one, with_threads("8"));
}

TEST(Cli, WritesReportToFile) {
  const auto path = std::filesystem::temp_directory_path() / "tpsi_cli_report.json";
  const Outcome o = invoke({"--suite", "geometry", "--out", path.string()});
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(nlohmann::json::parse(in)["suite"], "geometry");
  std::filesystem::remove(path);
}

TEST(Cli, DumpR) {
  const auto path = std::filesystem::temp_directory_path() / "tpsi_cli_r.bin";
  ASSERT_EQ(invoke({"dump", "--tensor", "R", "--n", "2", "--seed", "3", "--out", path.string()}).code, 0);
  std::ifstream in(path, std::ios::binary);
  const WeightTensor t = read_tensor(in);
  EXPECT_EQ(t.size(), 64u);
  EXPECT_EQ(t.labels(), kVertexLabels);

  RunConfig c;
  c.seed = 3;
  const WeightTensor direct = select_tensor(c, "R");
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(t.data()[i], direct.data()[i]);

  for (const char* sel : {"R'", "R''", "R'''", "R1", "planar-R"})
    EXPECT_EQ(invoke({"dump", "--tensor", sel, "--n", "3", "--out", path.string()}).code, 0) << sel;
  EXPECT_EQ(invoke({"dump", "--tensor", "Q", "--out", path.string()}).code, 2);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace tpsi::cli
