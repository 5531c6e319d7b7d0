#pragma once

#include <cstdint>

namespace dilates {

// splitmix64. Self-contained so that seeded runs reproduce bit-for-bit on
// every platform; the standard distributions make no such promise.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound > 0. Rejection keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }
};

// Stable derivation of a stream for chunk b of a seeded run.
inline SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t chunk) {
    SplitMix64 mix(seed ^ (0xD1B54A32D192ED03ULL * (chunk + 1)));
    return SplitMix64(mix.next());
}

}  // namespace dilates
