#pragma once

#include <cstdint>
#include <random>

namespace biplab {

/// splitmix64 step; used to spread seeds before feeding them to mt19937_64.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-derived sub-seed: stream s of master seed m is
/// splitmix64(m ^ splitmix64(s + 1)). Every independent draw in the
/// library uses one of these, so experiments replay from one master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(master ^ splitmix64(stream + 1));
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Uniform double in [0,1) with 53 random bits. mt19937_64 output is
/// specified by the standard, so this is reproducible across platforms
/// (std::uniform_real_distribution is not).
inline double rand_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Unbiased integer in [0, n) by rejection.
inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    for (;;) {
        std::uint64_t r = rng();
        if (r < limit) return r % n;
    }
}

}  // namespace biplab
