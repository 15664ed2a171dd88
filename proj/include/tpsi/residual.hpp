#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>

namespace tpsi {

enum class SweepMode { full, sampled };

const char* to_string(SweepMode mode) noexcept;

struct SweepOptions {
  SweepMode mode = SweepMode::full;
  std::size_t samples = 10000;  // assignments drawn in sampled mode
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

/// Comparison of the two sides of one identity over a set of entries.
struct ResidualReport {
  double max_abs_diff = 0;
  double rel_diff = 0;  // max_abs_diff / max |entry| over both sides
  std::complex<double> ratio_mean{0, 0};
  double ratio_spread = 0;  // max |lhs/rhs - ratio_mean| over the ratio entries
  std::size_t ratio_entries = 0;
  std::size_t entries_checked = 0;
  SweepMode mode = SweepMode::full;
};

/// Entries with |rhs| <= kRatioThreshold * max|entry| are left out of the
/// ratio statistics.
inline constexpr double kRatioThreshold = 1e-6;

ResidualReport compare(std::span<const std::complex<double>> lhs,
                       std::span<const std::complex<double>> rhs, SweepMode mode);

/// Calls body(i) for i in [0, count) on up to `threads` workers. Each index
/// is visited exactly once; bodies must only write state owned by their
/// index, which keeps results independent of the thread count.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

/// Thread count from TPSI_THREADS, or 1 when unset or invalid.
unsigned default_threads();

}  // namespace tpsi

namespace tpsi {

/// Both sides of an identity at one spin assignment.
using SidesFn = std::function<std::pair<std::complex<double>, std::complex<double>>(std::span<const int>)>;

/// Evaluates `sides` over assignments of `free_spins` spins in Z_n: every
/// assignment in full mode, options.samples counter-based draws keyed by
/// options.seed in sampled mode.
ResidualReport sweep(const SweepOptions& options, int n, std::size_t free_spins, const SidesFn& sides);

}  // namespace tpsi
