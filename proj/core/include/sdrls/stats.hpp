#pragma once

#include <cstddef>
#include <vector>

namespace sdrls {

struct MannWhitneyResult {
    double u_a;         // U statistic of the first sample
    double p_two_sided; // normal approximation, tie- and continuity-corrected
};

// Rank-sum test with midrank tie handling. Two-sided p from the normal
// approximation with tie-corrected variance and 0.5 continuity correction.
// Requires both samples non-empty. Identical constant samples give p = 1.
MannWhitneyResult mann_whitney_u(const std::vector<double>& a,
                                 const std::vector<double>& b);

// Exact two-sided p: enumerate every C(|a|+|b|, |a|) split of the pooled
// values and count splits whose U deviates from the mean at least as far as
// the observed one. Handles ties. Requires |a|, |b| <= 8.
double mann_whitney_exact_p(const std::vector<double>& a,
                            const std::vector<double>& b);

double mean(const std::vector<double>& v);
double median(std::vector<double> v);
// Population standard deviation (divides by count, so one value gives 0).
double std_dev(const std::vector<double>& v);

} // namespace sdrls
