#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace sdrls {

using BigInt = boost::multiprecision::cpp_int;

// Exact C(n, k); 0 for k < 0 or k > n. Arbitrary precision, so n in the
// hundreds is fine.
BigInt binom(unsigned n, long long k);

// ln C(n, s) via log-gamma.
double log_binom(unsigned n, unsigned s);

// C(n, s) * ln R as a double, +infinity once the value stops being
// representable. The stagnation counter is compared strictly against this,
// so a saturated threshold simply never triggers.
double sd_threshold(unsigned n, unsigned s, double R);

} // namespace sdrls
