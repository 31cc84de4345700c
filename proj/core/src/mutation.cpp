#include "sdrls/mutation.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace sdrls {

void flip_uniform_subset(BitString& x, unsigned count, RandomSource& rng,
                         std::vector<uint32_t>& flipped) {
    const unsigned n = x.size();
    assert(count <= n);
    flipped.clear();
    if (count == 0) return;

    // identity[i] == i between calls; grown lazily, shrunk never.
    thread_local std::vector<uint32_t> identity;
    thread_local std::vector<uint32_t> swapped_with;
    if (identity.size() < n) {
        auto old = static_cast<uint32_t>(identity.size());
        identity.resize(n);
        for (uint32_t i = old; i < n; ++i) identity[i] = i;
    }

    swapped_with.clear();
    for (unsigned i = 0; i < count; ++i) {
        auto j = static_cast<uint32_t>(i + rng.below(n - i));
        std::swap(identity[i], identity[j]);
        swapped_with.push_back(j);
        flipped.push_back(identity[i]);
        x.flip(identity[i]);
    }
    for (unsigned i = count; i-- > 0;)
        std::swap(identity[i], identity[swapped_with[i]]);
}

BitString s_flip(const BitString& x, unsigned s, RandomSource& rng) {
    if (s < 1 || s > x.size())
        throw std::invalid_argument("s_flip: s must be in [1, n]");
    BitString y = x;
    thread_local std::vector<uint32_t> scratch;
    flip_uniform_subset(y, s, rng, scratch);
    return y;
}

void flip_bernoulli(BitString& x, double p, RandomSource& rng,
                    std::vector<uint32_t>& flipped) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("flip_bernoulli: p must be in [0, 1]");
    flipped.clear();
    const unsigned n = x.size();
    if (p == 0.0) return;
    if (p == 1.0) {
        x.flip_all();
        for (uint32_t i = 0; i < n; ++i) flipped.push_back(i);
        return;
    }
    const double denom = std::log1p(-p); // < 0
    double i = 0.0;
    for (;;) {
        const double gap = std::log(rng.next_double_open()) / denom;
        if (gap >= double(n) - i) return; // next flip falls past the end
        i += std::floor(gap);
        const auto pos = static_cast<uint32_t>(i);
        if (pos >= n) return;
        x.flip(pos);
        flipped.push_back(pos);
        i += 1.0;
    }
}

BitString standard_bit_mutation(const BitString& x, double p, RandomSource& rng) {
    BitString y = x;
    thread_local std::vector<uint32_t> scratch;
    flip_bernoulli(y, p, rng, scratch);
    return y;
}

PowerLawAlpha::PowerLawAlpha(unsigned max_alpha, double beta) {
    if (max_alpha < 1)
        throw std::invalid_argument("PowerLawAlpha: max_alpha must be >= 1");
    if (!(beta > 1.0))
        throw std::invalid_argument("PowerLawAlpha: beta must be > 1");
    cdf_.resize(max_alpha);
    double acc = 0.0;
    for (unsigned i = 1; i <= max_alpha; ++i) {
        acc += std::pow(double(i), -beta);
        cdf_[i - 1] = acc;
    }
    for (double& c : cdf_) c /= acc;
    cdf_.back() = 1.0;
}

unsigned PowerLawAlpha::sample(RandomSource& rng) const {
    const double u = rng.next_double();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return static_cast<unsigned>(it - cdf_.begin()) + 1;
}

double PowerLawAlpha::probability(unsigned alpha) const {
    if (alpha < 1 || alpha > cdf_.size()) return 0.0;
    return alpha == 1 ? cdf_[0] : cdf_[alpha - 1] - cdf_[alpha - 2];
}

BinomialCount::BinomialCount(unsigned n, double p) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("BinomialCount: p must be in [0, 1]");
    cdf_.resize(size_t(n) + 1);
    if (p == 0.0 || p == 1.0) {
        const size_t point = p == 0.0 ? 0 : n;
        for (size_t k = 0; k <= n; ++k) cdf_[k] = k >= point ? 1.0 : 0.0;
        return;
    }
    // pmf through log-gamma; immune to (1-p)^n underflow for any n, p.
    const double lp = std::log(p);
    const double lq = std::log1p(-p);
    const double lg_n1 = std::lgamma(double(n) + 1.0);
    double acc = 0.0;
    for (unsigned k = 0; k <= n; ++k) {
        const double log_pmf = lg_n1 - std::lgamma(double(k) + 1.0) -
                               std::lgamma(double(n - k) + 1.0) +
                               double(k) * lp + double(n - k) * lq;
        acc += std::exp(log_pmf);
        cdf_[k] = acc;
    }
    for (double& c : cdf_) c /= acc;
    cdf_.back() = 1.0;
}

unsigned BinomialCount::sample(RandomSource& rng) const {
    const double u = rng.next_double();
    // mass sits near zero for the rates used here, so probe a short prefix
    const auto probe = static_cast<unsigned>(std::min<size_t>(cdf_.size(), 12));
    for (unsigned k = 0; k < probe; ++k)
        if (u < cdf_[k]) return k;
    return static_cast<unsigned>(
        std::upper_bound(cdf_.begin() + probe, cdf_.end(), u) - cdf_.begin());
}

double BinomialCount::probability(unsigned k) const {
    if (k >= cdf_.size()) return 0.0;
    return k == 0 ? cdf_[0] : cdf_[k] - cdf_[k - 1];
}

BitString heavy_tailed_mutation(const BitString& x, double beta, RandomSource& rng) {
    if (x.size() < 2)
        throw std::invalid_argument("heavy_tailed_mutation: n must be >= 2");
    const PowerLawAlpha law(x.size() / 2, beta);
    const unsigned alpha = law.sample(rng);
    return standard_bit_mutation(x, double(alpha) / double(x.size()), rng);
}

} // namespace sdrls
