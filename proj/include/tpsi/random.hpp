#pragma once

#include <cstdint>

namespace tpsi {

/// Counter-based generator: every draw is a pure function of
/// (seed, index, slot), so sweeps are reproducible in any evaluation order.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t index, std::uint64_t slot = 0) const noexcept {
    return mix(mix(seed_ ^ mix(index + 0x632be59bd9b4e019ULL)) + slot);
  }

  /// Uniform in [0, 1).
  double uniform(std::uint64_t index, std::uint64_t slot = 0) const noexcept {
    return static_cast<double>(bits(index, slot) >> 11) * 0x1.0p-53;
  }

  double uniform(std::uint64_t index, std::uint64_t slot, double lo, double hi) const noexcept {
    return lo + (hi - lo) * uniform(index, slot);
  }

  int spin(std::uint64_t index, std::uint64_t slot, int n) const noexcept {
    return static_cast<int>(bits(index, slot) % static_cast<std::uint64_t>(n));
  }

 private:
  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
};

}  // namespace tpsi
