#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <random>

namespace netent {

/// Uniform integer in [0, n) by rejection sampling. Stable across standard
/// libraries, unlike std::uniform_int_distribution.
inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
    assert(n > 0);
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t x = rng();
    while (x >= limit) {
        x = rng();
    }
    return x % n;
}

/// Uniform double in [0, 1) with 53 bits of randomness.
inline double rand_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace netent
