#pragma once

#include <cstdint>

namespace f2lin {

// SplitMix64. The state starts at the seed and advances by the golden-ratio
// increment; each output is the finalizer of the advanced state. Matrix
// generation consumes exactly one output per bit in row-major order, so other
// implementations can reproduce the same matrices bit for bit.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

} // namespace f2lin
