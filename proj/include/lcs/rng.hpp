#pragma once

#include <cstdint>

namespace lcs {

// Fixed 64-bit generator (splitmix64). The generator algorithm is part of the
// file-format and benchmark contract: the same seed must produce the same
// dataset bytes on every platform, so the standard library engines (which are
// unspecified across implementations for some distributions) are not used.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, m). Modulo bias is below 2^-50 for m < 2^14 and is
  // accepted; reproducibility matters more here than perfect uniformity.
  std::uint32_t below(std::uint32_t m) {
    return static_cast<std::uint32_t>(next() % m);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Child stream for parallel work items: deterministic in (seed, index),
// independent of scheduling order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0xA0761D6478BD642Full + 0x9E3779B97F4A7C15ull * (index + 1)));
  return g.next();
}

}  // namespace lcs
