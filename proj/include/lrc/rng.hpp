// rng.hpp
#pragma once
#include <cstdint>
#include <random>

namespace lrc {

// Seeded pseudo-random stream. The engine (mt19937_64) is fully specified by
// the standard; the mappings below avoid std::*_distribution, whose output is
// implementation-defined, so identical seeds replay identically everywhere.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 bits of resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n); n must be > 0. Rejection sampling keeps it unbiased.
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform in [lo, hi], inclusive.
    std::uint64_t uniform_between(std::uint64_t lo, std::uint64_t hi) {
        return lo + uniform_index(hi - lo + 1);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace lrc
