#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace emgdx {

// Deterministic random source. mt19937_64 is fully specified by the standard;
// the value mappings below are hand-rolled because std::*_distribution output
// is implementation-defined and would break cross-platform reproducibility.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n). n must be positive.
  std::uint64_t uniform_int(std::uint64_t n) {
    // Multiply-shift mapping; deterministic and unbiased enough for the
    // sample sizes used here.
    return static_cast<std::uint64_t>(uniform01() * static_cast<double>(n)) %
           n;
  }

  int uniform_int_range(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(uniform_int(
                    static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Standard normal via Box-Muller, one value per call (no cached spare, so
  // the draw sequence is a pure function of call order).
  double normal01() {
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  double normal(double mean, double stddev) {
    return mean + stddev * normal01();
  }

 private:
  std::mt19937_64 engine_;
};

// splitmix64 finalizer; used to mix seeds with stream tags so every module
// and index gets an independent deterministic stream.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::string_view tag) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return mix_seed(a, h);
}

}  // namespace emgdx
