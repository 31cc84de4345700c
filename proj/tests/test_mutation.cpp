#include "doctest.h"

#include "sdrls/combinatorics.hpp"
#include "sdrls/mutation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

using namespace sdrls;

TEST_CASE("flip_uniform_subset flips exactly the reported positions") {
    RandomSource rng(31);
    std::vector<uint32_t> flipped;
    for (unsigned count : {0u, 1u, 3u, 17u, 40u}) {
        BitString x = BitString::random(40, rng);
        const BitString before = x;
        flip_uniform_subset(x, count, rng, flipped);
        CHECK(flipped.size() == count);
        CHECK(hamming(before, x) == count);
        std::vector<uint32_t> sorted = flipped;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        for (uint32_t pos : flipped) {
            CHECK(pos < 40);
            CHECK(x.test(pos) != before.test(pos));
        }
    }
}

TEST_CASE("s_flip changes exactly s bits") {
    RandomSource rng(8);
    CHECK(s_flip(BitString::parse("0000"), 4, rng) == BitString::parse("1111"));

    const BitString x = BitString::random(20, rng);
    for (unsigned s = 1; s <= 20; ++s)
        CHECK(hamming(x, s_flip(x, s, rng)) == s);

    CHECK_THROWS_AS(s_flip(x, 0, rng), std::invalid_argument);
    CHECK_THROWS_AS(s_flip(x, 21, rng), std::invalid_argument);
}

TEST_CASE("single-bit flip picks each position about equally often") {
    RandomSource rng(77);
    const BitString x = BitString::parse("1010");
    std::map<std::string, int> seen;
    const int samples = 8000;
    for (int i = 0; i < samples; ++i) seen[s_flip(x, 1, rng).to_string()]++;
    REQUIRE(seen.size() == 4);
    for (const char* v : {"0010", "1110", "1000", "1011"}) {
        const double freq = double(seen.at(v)) / samples;
        CHECK(freq == doctest::Approx(0.25).epsilon(0.15));
    }
}

TEST_CASE("flip_bernoulli edge rates") {
    RandomSource rng(3);
    std::vector<uint32_t> flipped;

    BitString x = BitString::random(70, rng);
    const BitString before = x;
    flip_bernoulli(x, 0.0, rng, flipped);
    CHECK(x == before);
    CHECK(flipped.empty());

    flip_bernoulli(x, 1.0, rng, flipped);
    CHECK(flipped.size() == 70);
    CHECK(hamming(x, before) == 70);

    CHECK_THROWS_AS(flip_bernoulli(x, -0.1, rng, flipped), std::invalid_argument);
    CHECK_THROWS_AS(flip_bernoulli(x, 1.5, rng, flipped), std::invalid_argument);
}

TEST_CASE("flip_bernoulli reports ascending in-range positions") {
    RandomSource rng(15);
    std::vector<uint32_t> flipped;
    for (int i = 0; i < 200; ++i) {
        BitString x(100);
        flip_bernoulli(x, 0.2, rng, flipped);
        CHECK(std::is_sorted(flipped.begin(), flipped.end()));
        for (uint32_t pos : flipped) CHECK(pos < 100);
        CHECK(x.ones_count() == flipped.size());
    }
}

TEST_CASE("standard_bit_mutation mean flip count matches n*p") {
    RandomSource rng(123);
    const BitString zero(100);
    uint64_t total = 0;
    const int samples = 100000;
    for (int i = 0; i < samples; ++i)
        total += standard_bit_mutation(zero, 0.01, rng).ones_count();
    const double mean = double(total) / samples;
    CHECK(mean == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("power-law alpha distribution") {
    const PowerLawAlpha law(5, 1.5);
    CHECK(law.max_alpha() == 5);
    // 1 / sum_{j=1..5} j^-1.5 = 0.568038
    CHECK(law.probability(1) == doctest::Approx(0.568038).epsilon(1e-5));
    double total = 0.0;
    for (unsigned a = 1; a <= 5; ++a) total += law.probability(a);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

    const PowerLawAlpha steep(50, 4.0);
    CHECK(steep.probability(1) == doctest::Approx(0.923941).epsilon(1e-5));

    RandomSource rng(9);
    int ones = 0;
    const int samples = 100000;
    for (int i = 0; i < samples; ++i) {
        const unsigned a = law.sample(rng);
        CHECK(a >= 1);
        CHECK(a <= 5);
        if (a == 1) ++ones;
    }
    CHECK(double(ones) / samples == doctest::Approx(0.568038).epsilon(0.018));

    CHECK_THROWS_AS(PowerLawAlpha(0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(PowerLawAlpha(5, 1.0), std::invalid_argument);
}

TEST_CASE("binomial count sampler matches the exact pmf") {
    const BinomialCount bc(20, 0.3);
    // independent pmf: exact C(20,k) times powers
    double total = 0.0;
    for (unsigned k = 0; k <= 20; ++k) {
        const double expect = binom(20, k).convert_to<double>() *
                              std::pow(0.3, double(k)) * std::pow(0.7, double(20 - k));
        CHECK(bc.probability(k) == doctest::Approx(expect).epsilon(1e-9));
        total += bc.probability(k);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

    const BinomialCount zero(10, 0.0);
    CHECK(zero.probability(0) == 1.0);
    const BinomialCount one(10, 1.0);
    CHECK(one.probability(10) == 1.0);
    RandomSource rng(4);
    CHECK(zero.sample(rng) == 0);
    CHECK(one.sample(rng) == 10);

    uint64_t sum = 0;
    const int samples = 100000;
    const BinomialCount small(100, 0.01);
    for (int i = 0; i < samples; ++i) sum += small.sample(rng);
    CHECK(double(sum) / samples == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("heavy-tailed mutation at n=2 behaves like rate one half") {
    // alpha can only be 1, so each bit flips with probability 1/2
    RandomSource rng(21);
    const BitString x = BitString::parse("00");
    int counts[3] = {0, 0, 0};
    const int samples = 40000;
    for (int i = 0; i < samples; ++i)
        counts[heavy_tailed_mutation(x, 3.0, rng).ones_count()]++;
    CHECK(double(counts[0]) / samples == doctest::Approx(0.25).epsilon(0.1));
    CHECK(double(counts[1]) / samples == doctest::Approx(0.50).epsilon(0.1));
    CHECK(double(counts[2]) / samples == doctest::Approx(0.25).epsilon(0.1));

    CHECK_THROWS_AS(heavy_tailed_mutation(BitString(1), 1.5, rng), std::invalid_argument);
}

TEST_CASE("mutation operators are deterministic given the seed") {
    RandomSource a(5551), b(5551);
    const BitString x = BitString::random(64, a);
    const BitString y = BitString::random(64, b);
    REQUIRE(x == y);
    CHECK(s_flip(x, 5, a) == s_flip(y, 5, b));
    CHECK(standard_bit_mutation(x, 0.13, a) == standard_bit_mutation(y, 0.13, b));
    CHECK(heavy_tailed_mutation(x, 1.5, a) == heavy_tailed_mutation(y, 1.5, b));
}
