#ifndef THETA_RNG_HPP
#define THETA_RNG_HPP

#include <cstdint>

namespace theta {

// SplitMix64: tiny deterministic generator for reproducible sampling.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // Uniform in [0, bound); bound > 0. Modulo bias is irrelevant here.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace theta

#endif
