#pragma once

#include <cstdint>

namespace qha {

// SplitMix64: tiny, documented, splittable 64-bit generator.  Chosen over
// std::mt19937_64 because its output sequence is pinned by the algorithm
// itself (a dozen lines below), so seeded experiment data is reproducible
// across standard libraries and platforms.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform double in (0, 1].
    double uniform() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    // Standard normal via Box-Muller (one fresh pair of uniforms per call).
    double normal();
};

}  // namespace qha
