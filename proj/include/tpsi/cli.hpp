#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "tpsi/residual.hpp"
#include "tpsi/tensor.hpp"

namespace tpsi::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kPass = 0,
  kResidualFailure = 1,
  kUsageError = 2,
  kDegenerateGeometry = 3,
};

enum class Suite { fermat, geometry, vertex_te, irc_te, psi, psibar, planar_dual, planar_decompose, all };

std::optional<Suite> parse_suite(const std::string& name);
const char* to_string(Suite suite) noexcept;

struct RunConfig {
  int n = 2;
  std::uint64_t seed = 0;
  std::optional<std::array<double, 6>> angles;  // dihedral angles, radians unless `degrees`
  bool degrees = false;
  double tolerance = 1e-8;
  std::size_t samples = 10000;
  Suite suite = Suite::all;
  std::optional<SweepMode> mode;  // unset: full sweeps for N = 2, sampled otherwise
  unsigned threads = 1;
};

struct RunResult {
  int exit_code = kPass;
  nlohmann::ordered_json report;
};

/// Executes the configured suite. Invalid configurations report
/// kUsageError; degenerate geometry reports kDegenerateGeometry.
RunResult run(const RunConfig& config);

/// Tensor selectors accepted by dump: R, R', R'', R''' (also R1, R2, R3)
/// and planar-R.
WeightTensor select_tensor(const RunConfig& config, const std::string& selector);

/// argv-level entry point of the tpsi tool.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace tpsi::cli
