// rng.hpp - deterministic PRNG used by the generator and the random-walk
// oracle. std::mt19937 with std distributions is not byte-stable across
// standard libraries, so seeds must reproduce exactly with this one.
#pragma once

#include <cstdint>

namespace logpath {

struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound); bound >= 1. Rejection-free modulo; the bias is
    /// negligible for the small bounds used here.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Uniform in [lo, hi] inclusive.
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    SplitMix64 s(a ^ (0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2)));
    s.next();
    return s.next();
}

}  // namespace logpath
