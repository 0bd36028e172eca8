#pragma once

#include <cstdint>

namespace framecoh {

/// Finalizer of SplitMix64. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives an independent stream key from a base key and an index.
/// Used for per-trial and per-column seeds; frozen, do not change.
constexpr std::uint64_t hash64(std::uint64_t base, std::uint64_t index) noexcept {
  return mix64(mix64(base ^ 0x6a09e667f3bcc909ULL) + 0x9e3779b97f4a7c15ULL * (index + 1));
}

/// Counter-based generator "splitmix64-ctr/v1": output n is mix64(key + (n+1)*gamma).
/// Normals come from Box-Muller so sequences are identical across standard libraries.
class CounterRng {
 public:
  static constexpr const char* kName = "splitmix64-ctr/v1";

  explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

  std::uint64_t next() noexcept {
    ++counter_;
    return mix64(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
  }

  /// Uniform on (0, 1].
  double uniform() noexcept {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform integer on [0, bound), bound > 0. Rejection sampling, unbiased.
  std::uint64_t below(std::uint64_t bound) noexcept;

  /// Standard normal via Box-Muller (second variate cached).
  double normal() noexcept;

  std::uint64_t key() const noexcept { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace framecoh
