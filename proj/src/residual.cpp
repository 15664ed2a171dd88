#include "tpsi/residual.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>
#include <vector>

#include "tpsi/error.hpp"
#include "tpsi/random.hpp"

namespace tpsi {

const char* to_string(SweepMode mode) noexcept {
  return mode == SweepMode::full ? "full-sweep" : "sampled";
}

ResidualReport compare(std::span<const std::complex<double>> lhs,
                       std::span<const std::complex<double>> rhs, SweepMode mode) {
  if (lhs.size() != rhs.size()) throw Error(ErrorCode::plan_error, "sides have different entry counts");
  ResidualReport r;
  r.mode = mode;
  r.entries_checked = lhs.size();
  double scale = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    r.max_abs_diff = std::max(r.max_abs_diff, std::abs(lhs[i] - rhs[i]));
    scale = std::max({scale, std::abs(lhs[i]), std::abs(rhs[i])});
  }
  r.rel_diff = scale > 0 ? r.max_abs_diff / scale : 0.0;

  const double cutoff = kRatioThreshold * scale;
  std::complex<double> sum{0, 0};
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (std::abs(rhs[i]) > cutoff) {
      sum += lhs[i] / rhs[i];
      ++r.ratio_entries;
    }
  }
  if (r.ratio_entries > 0) {
    r.ratio_mean = sum / static_cast<double>(r.ratio_entries);
    for (std::size_t i = 0; i < lhs.size(); ++i)
      if (std::abs(rhs[i]) > cutoff) r.ratio_spread = std::max(r.ratio_spread, std::abs(lhs[i] / rhs[i] - r.ratio_mean));
  }
  return r;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::size_t>(count, 256))));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  constexpr std::size_t kChunk = 64;
  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t begin = next.fetch_add(kChunk);
        if (begin >= count) return;
        const std::size_t end = std::min(count, begin + kChunk);
        for (std::size_t i = begin; i < end; ++i) body(i);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = count;
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

unsigned default_threads() {
  if (const char* env = std::getenv("TPSI_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<unsigned>(v);
  }
  return 1;
}

}  // namespace tpsi

namespace tpsi {

ResidualReport sweep(const SweepOptions& options, int n, std::size_t free_spins, const SidesFn& sides) {
  std::size_t count = 1;
  if (options.mode == SweepMode::full) {
    for (std::size_t i = 0; i < free_spins; ++i) count *= static_cast<std::size_t>(n);
  } else {
    count = options.samples;
  }
  const CounterRng rng(options.seed);
  std::vector<std::complex<double>> lhs(count), rhs(count);
  parallel_for(count, options.threads, [&](std::size_t k) {
    std::vector<int> spins(free_spins);
    if (options.mode == SweepMode::full) {
      std::size_t rest = k;
      for (std::size_t i = free_spins; i-- > 0;) {
        spins[i] = static_cast<int>(rest % static_cast<std::size_t>(n));
        rest /= static_cast<std::size_t>(n);
      }
    } else {
      for (std::size_t i = 0; i < free_spins; ++i) spins[i] = rng.spin(k, i, n);
    }
    std::tie(lhs[k], rhs[k]) = sides(spins);
  });
  return compare(lhs, rhs, options.mode);
}

}  // namespace tpsi
