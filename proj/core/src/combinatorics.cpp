#include "sdrls/combinatorics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sdrls {

BigInt binom(unsigned n, long long k) {
    if (k < 0 || k > static_cast<long long>(n)) return 0;
    auto kk = static_cast<unsigned>(k);
    if (kk > n - kk) kk = n - kk;
    BigInt result = 1;
    // result stays integral after each division: result holds C(n - kk + i, i).
    for (unsigned i = 1; i <= kk; ++i) {
        result *= n - kk + i;
        result /= i;
    }
    return result;
}

double log_binom(unsigned n, unsigned s) {
    if (s > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(double(n) + 1.0) - std::lgamma(double(s) + 1.0) -
           std::lgamma(double(n - s) + 1.0);
}

double sd_threshold(unsigned n, unsigned s, double R) {
    if (!(R > 1.0)) throw std::invalid_argument("sd_threshold: R must be > 1");
    if (s > n) throw std::invalid_argument("sd_threshold: s must be <= n");
    const double log_ln_r = std::log(std::log(R));
    const double lb = log_binom(n, s);
    // Exact path while C(n,s) fits a double without rounding.
    if (lb < 36.0) { // 2^52 ~ e^36.04
        const BigInt c = binom(n, s);
        return static_cast<double>(c) * std::log(R);
    }
    const double t = lb + log_ln_r;
    if (t >= 709.0) return std::numeric_limits<double>::infinity();
    return std::exp(t);
}

} // namespace sdrls
