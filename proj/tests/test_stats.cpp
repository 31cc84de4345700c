#include "doctest.h"

#include "sdrls/stats.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace sdrls;

TEST_CASE("mean, median, population standard deviation") {
    const std::vector<double> one{7.0};
    CHECK(mean(one) == 7.0);
    CHECK(median(one) == 7.0);
    CHECK(std_dev(one) == 0.0);

    const std::vector<double> v{2.0, 4.0, 6.0};
    CHECK(mean(v) == doctest::Approx(4.0));
    CHECK(median(v) == doctest::Approx(4.0));
    CHECK(std_dev(v) == doctest::Approx(std::sqrt(8.0 / 3.0)).epsilon(1e-12));

    // even length: average of the middle pair, input order irrelevant
    const std::vector<double> e{4.0, 1.0, 3.0, 2.0};
    CHECK(median(e) == doctest::Approx(2.5));

    CHECK_THROWS_AS(mean({}), std::invalid_argument);
    CHECK_THROWS_AS(median({}), std::invalid_argument);
    CHECK_THROWS_AS(std_dev({}), std::invalid_argument);
}

TEST_CASE("rank-sum test: fully separated samples") {
    const std::vector<double> a{1.0, 2.0, 3.0};
    const std::vector<double> b{4.0, 5.0, 6.0};
    const MannWhitneyResult r = mann_whitney_u(a, b);
    CHECK(r.u_a == doctest::Approx(0.0));
    // normal approximation with tie correction and continuity correction
    CHECK(r.p_two_sided == doctest::Approx(0.0808556).epsilon(1e-5));
    // exact tail: 2 of the C(6,3)=20 orderings are at least this extreme
    CHECK(mann_whitney_exact_p(a, b) == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("rank-sum test: identical and constant samples") {
    const std::vector<double> c{5.0, 5.0, 5.0};
    const MannWhitneyResult r = mann_whitney_u(c, c);
    CHECK(r.u_a == doctest::Approx(4.5));
    CHECK(r.p_two_sided == doctest::Approx(1.0));

    const std::vector<double> a{1.0, 2.0, 9.0};
    const MannWhitneyResult same = mann_whitney_u(a, a);
    CHECK(same.u_a == doctest::Approx(4.5)); // n1*n2/2
    CHECK(same.p_two_sided == doctest::Approx(1.0));
}

TEST_CASE("rank-sum test: invariances") {
    const std::vector<double> a{3.0, 9.0, 4.0, 12.0};
    const std::vector<double> b{1.0, 8.0, 2.0};
    const MannWhitneyResult r = mann_whitney_u(a, b);

    // shifting both samples by a constant changes nothing
    std::vector<double> as = a, bs = b;
    for (double& x : as) x += 100.0;
    for (double& x : bs) x += 100.0;
    const MannWhitneyResult shifted = mann_whitney_u(as, bs);
    CHECK(shifted.u_a == doctest::Approx(r.u_a));
    CHECK(shifted.p_two_sided == doctest::Approx(r.p_two_sided));

    // swapping the samples mirrors the statistic and keeps the p-value
    const MannWhitneyResult swapped = mann_whitney_u(b, a);
    CHECK(swapped.u_a == doctest::Approx(12.0 - r.u_a)); // n1*n2 - U_a
    CHECK(swapped.p_two_sided == doctest::Approx(r.p_two_sided));
}

TEST_CASE("rank-sum test: tied observations") {
    const std::vector<double> a{1.0, 2.0, 2.0, 3.0};
    const std::vector<double> b{2.0, 3.0, 3.0, 4.0};
    const MannWhitneyResult r = mann_whitney_u(a, b);
    CHECK(r.u_a == doctest::Approx(3.0));
    CHECK(r.p_two_sided == doctest::Approx(0.1720337).epsilon(1e-5));
    // exact distribution over all C(8,4) relabelings honours the ties
    CHECK(mann_whitney_exact_p(a, b) == doctest::Approx(2.0 / 7.0).epsilon(1e-12));
}

TEST_CASE("rank-sum test: degenerate sizes and guards") {
    const MannWhitneyResult tiny = mann_whitney_u({1.0}, {2.0});
    CHECK(tiny.u_a == doctest::Approx(0.0));
    CHECK(tiny.p_two_sided == doctest::Approx(1.0)); // too little data to reject

    CHECK_THROWS_AS(mann_whitney_u({}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(mann_whitney_u({1.0}, {}), std::invalid_argument);
    // exact version enumerates C(n1+n2, n1) splits, capped at 8 per side
    const std::vector<double> nine(9, 1.0);
    CHECK_THROWS_AS(mann_whitney_exact_p(nine, nine), std::invalid_argument);
}

TEST_CASE("rank-sum p stays within [0, 1] on random inputs") {
    uint64_t state = 12345;
    auto next = [&state] {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return double(state >> 40);
    };
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<double> a(5), b(7);
        for (double& x : a) x = next();
        for (double& x : b) x = next();
        const MannWhitneyResult r = mann_whitney_u(a, b);
        CHECK(r.p_two_sided >= 0.0);
        CHECK(r.p_two_sided <= 1.0);
        CHECK(r.u_a >= 0.0);
        CHECK(r.u_a <= 35.0);
    }
}
