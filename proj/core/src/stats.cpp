#include "sdrls/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace sdrls {

namespace {

// U of group A against group B by direct pair counting (ties count half).
double u_statistic(const std::vector<double>& a, const std::vector<double>& b) {
    double u = 0.0;
    for (double x : a)
        for (double y : b) {
            if (x > y) u += 1.0;
            else if (x == y) u += 0.5;
        }
    return u;
}

} // namespace

MannWhitneyResult mann_whitney_u(const std::vector<double>& a,
                                 const std::vector<double>& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("mann_whitney_u: both samples must be non-empty");
    const double n1 = double(a.size()), n2 = double(b.size());
    const double n = n1 + n2;

    std::vector<double> pooled;
    pooled.reserve(a.size() + b.size());
    pooled.insert(pooled.end(), a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    std::vector<size_t> order(pooled.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t i, size_t j) { return pooled[i] < pooled[j]; });

    // midranks + tie-group correction term sum(t^3 - t)
    std::vector<double> rank(pooled.size());
    double tie_term = 0.0;
    for (size_t i = 0; i < order.size();) {
        size_t j = i;
        while (j < order.size() && pooled[order[j]] == pooled[order[i]]) ++j;
        const double midrank = (double(i + 1) + double(j)) / 2.0;
        for (size_t k = i; k < j; ++k) rank[order[k]] = midrank;
        const double t = double(j - i);
        tie_term += t * t * t - t;
        i = j;
    }

    double rank_sum_a = 0.0;
    for (size_t i = 0; i < a.size(); ++i) rank_sum_a += rank[i];
    const double u_a = rank_sum_a - n1 * (n1 + 1.0) / 2.0;

    const double mu = n1 * n2 / 2.0;
    const double var =
        n1 * n2 / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    if (var <= 0.0) return {u_a, 1.0}; // every pooled value tied

    double z = std::abs(u_a - mu) - 0.5; // continuity correction
    if (z < 0.0) z = 0.0;
    z /= std::sqrt(var);
    const double p = std::erfc(z / std::sqrt(2.0));
    return {u_a, std::min(p, 1.0)};
}

double mann_whitney_exact_p(const std::vector<double>& a,
                            const std::vector<double>& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("mann_whitney_exact_p: both samples must be non-empty");
    if (a.size() > 8 || b.size() > 8)
        throw std::invalid_argument("mann_whitney_exact_p: samples must have size <= 8");

    const double observed = u_statistic(a, b);
    const double mu = double(a.size()) * double(b.size()) / 2.0;
    const double dev = std::abs(observed - mu);

    std::vector<double> pooled;
    pooled.insert(pooled.end(), a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    const size_t total = pooled.size(), n1 = a.size();

    std::vector<size_t> pick(n1);
    std::iota(pick.begin(), pick.end(), size_t{0});
    uint64_t extreme = 0, splits = 0;
    std::vector<double> ga(n1), gb(total - n1);
    const double eps = 1e-9; // U values are multiples of 0.5; absorb fp noise
    for (;;) {
        ga.clear();
        gb.clear();
        size_t next = 0;
        for (size_t i = 0; i < total; ++i) {
            if (next < n1 && pick[next] == i) {
                ga.push_back(pooled[i]);
                ++next;
            } else {
                gb.push_back(pooled[i]);
            }
        }
        if (std::abs(u_statistic(ga, gb) - mu) >= dev - eps) ++extreme;
        ++splits;

        int i = int(n1) - 1;
        while (i >= 0 && pick[i] == total - n1 + size_t(i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (size_t k = size_t(i) + 1; k < n1; ++k) pick[k] = pick[k - 1] + 1;
    }
    return double(extreme) / double(splits);
}

double mean(const std::vector<double>& v) {
    if (v.empty()) throw std::invalid_argument("mean: empty sample");
    return std::accumulate(v.begin(), v.end(), 0.0) / double(v.size());
}

double median(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("median: empty sample");
    std::sort(v.begin(), v.end());
    const size_t h = v.size() / 2;
    return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2.0;
}

double std_dev(const std::vector<double>& v) {
    const double m = mean(v);
    double acc = 0.0;
    for (double x : v) acc += (x - m) * (x - m);
    return std::sqrt(acc / double(v.size()));
}

} // namespace sdrls
