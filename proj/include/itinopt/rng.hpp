#pragma once

#include <cmath>
#include <cstdint>

namespace itinopt {

// SplitMix64 (Steele, Lea, Flood 2014). The project-wide seeded generator:
// every seeded path (catalog generation, GA, annealing, benches) draws from
// this algorithm so a seed means the same bit stream on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit mantissa.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n). Multiply-shift bound, no modulo bias.
    uint64_t next_below(uint64_t n) {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    double next_range(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    bool next_bool(double p) { return next_double() < p; }

    // Standard normal via Box-Muller; consumes exactly two draws per call.
    double next_gaussian() {
        double u1 = 0.0;
        do {
            u1 = next_double();
        } while (u1 <= 0.0);
        double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    uint64_t state_;
};

// SplitMix64 finalizer as a mixing function; used to derive independent
// substreams from (seed, stream-index) pairs.
inline uint64_t mix64(uint64_t a, uint64_t b) {
    uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace itinopt
