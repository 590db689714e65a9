#pragma once

#include <cstdint>

namespace sendov {

/// SplitMix64 stream. Self-contained so that fixed seeds reproduce the same
/// draws on every platform and standard library.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (one value per two uniforms).
    double gaussian();

  private:
    std::uint64_t state_;
};

/// Decorrelated per-trial seed derived from a base seed and a trial index.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace sendov
