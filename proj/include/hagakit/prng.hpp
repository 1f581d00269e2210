#pragma once

#include <cstdint>

namespace hagakit {

/// SplitMix64. Chosen for the verification sweeps because its output is
/// specified exactly (same stream on every platform for a given seed).
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1): top 53 bits scaled by 2^-53.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in the half-open interval (lo, hi] (never returns lo).
    double uniform_half_open(double lo, double hi) {
        return hi - (hi - lo) * uniform01();
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }
};

}  // namespace hagakit
