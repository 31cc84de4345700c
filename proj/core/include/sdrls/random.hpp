#pragma once

#include <cstdint>

#include "sdrls/bitstring.hpp"

namespace sdrls {

// Splitmix-style 64-bit stream. Small state, fast, and good enough
// statistically for randomized search; most importantly the whole suite's
// reproducibility contract rests on it: same seed, same sequence, on any
// platform. Per-trial streams come from derive(), a pure mixing hash, so
// results never depend on worker scheduling.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix64(state_);
    }

    // [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // (0, 1]; safe to feed std::log.
    double next_double_open() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Uniform in [0, bound), unbiased via rejection. bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    bool coin() { return next_u64() >> 63; }

    static std::uint64_t mix64(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    // Pure function of (seed, index); distinct indices give decorrelated streams.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        return mix64(seed ^ mix64(index + 0x9E3779B97F4A7C15ull));
    }

private:
    std::uint64_t state_;
};

inline BitString BitString::random(std::uint32_t n, RandomSource& rng) {
    BitString x(n);
    for (std::uint32_t i = 0; i < n; ++i)
        x.set(i, rng.coin());
    return x;
}

} // namespace sdrls
