#pragma once

#include "sdrls/bitstring.hpp"
#include "sdrls/random.hpp"

#include <cstdint>
#include <vector>

namespace sdrls {

// Flips exactly `count` distinct positions of x, uniform over all C(n, count)
// position sets. `flipped` is cleared and receives the chosen positions.
// Allows count == 0 (no-op). Cost is O(count) per call after warm-up: the
// partial shuffle runs over a persistent thread-local identity array whose
// swaps are undone before returning.
void flip_uniform_subset(BitString& x, unsigned count, RandomSource& rng,
                         std::vector<uint32_t>& flipped);

// Returns a copy of x with exactly s positions flipped, 1 <= s <= n.
BitString s_flip(const BitString& x, unsigned s, RandomSource& rng);

// Flips each bit of x independently with probability p, in place. Positions
// are visited by geometric gap sampling, so the cost is O(1 + n*p) draws
// rather than n. `flipped` is cleared and receives the flipped positions.
void flip_bernoulli(BitString& x, double p, RandomSource& rng,
                    std::vector<uint32_t>& flipped);

// Returns a copy of x with each bit flipped independently with probability p.
BitString standard_bit_mutation(const BitString& x, double p, RandomSource& rng);

// Samples alpha in [1, max_alpha] with Pr(alpha = i) proportional to i^(-beta).
class PowerLawAlpha {
public:
    // max_alpha >= 1, beta > 1.
    PowerLawAlpha(unsigned max_alpha, double beta);

    unsigned sample(RandomSource& rng) const;
    double probability(unsigned alpha) const;
    unsigned max_alpha() const { return static_cast<unsigned>(cdf_.size()); }

private:
    std::vector<double> cdf_;
};

// Samples Binomial(n, p) flip counts by inverse-CDF lookup over the full
// support {0..n}. Construction is O(n); a sample costs one rng draw.
class BinomialCount {
public:
    // 0 <= p <= 1.
    BinomialCount(unsigned n, double p);

    unsigned sample(RandomSource& rng) const;
    double probability(unsigned k) const;

private:
    std::vector<double> cdf_;
};

// Samples alpha from the power law on [1, floor(n/2)], then flips each bit
// independently with probability alpha/n. Requires n >= 2.
BitString heavy_tailed_mutation(const BitString& x, double beta, RandomSource& rng);

} // namespace sdrls
