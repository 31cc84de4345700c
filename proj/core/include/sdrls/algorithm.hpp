#pragma once

#include "sdrls/problem.hpp"
#include "sdrls/random.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sdrls {

enum class Variant {
    RlsStatic, // flip exactly s bits, s fixed
    Rls12,     // flip 1 or 2 bits, equally likely
    SdRls,     // strength-raising local search with stagnation counter
    SdRlsStar, // radius variant: sweeps strengths r..1 inside each radius
    EaOneOne,  // standard bit mutation at a fixed rate
    FeaBeta,   // standard bit mutation at rate alpha/n, alpha power-law
    SdEa       // standard bit mutation with stagnation-raised rate r/n
};

// Canonical lowercase family name, e.g. "sd-rls-star".
const char* variant_name(Variant v);

struct AlgorithmConfig {
    Variant variant = Variant::SdRls;
    unsigned s = 1;     // RlsStatic: static flip strength
    double rate = 0.0;  // EaOneOne: mutation probability; 0 means 1/n
    double beta = 1.5;  // FeaBeta: power-law exponent
    double R = 0.0;     // SD variants: stagnation parameter; 0 means default
    double threshold_multiplier = 1.0; // SdEa only: scales every threshold
    std::string label;  // free-form tag carried into result rows

    // Default R: image-size bound for SdRls and SdEa, n^3 times the image
    // bound for SdRlsStar (the radius variant needs the stronger guarantee
    // to pay for re-visiting low strengths).
    double resolved_R(const Problem& p) const;
    double resolved_rate(unsigned n) const;
    // Throws invalid_argument naming the offending field.
    void validate(const Problem& p) const;
};

enum class TraceEventType : uint8_t {
    Improve,      // strict improvement accepted
    EqualMove,    // equal-fitness offspring accepted and distinct from parent
    StrengthUp,   // stagnation trigger raised the strength/rate
    StrengthDown, // radius variant stepping from s down to s-1
    RadiusUp,     // radius variant: r -> r+1, s -> r+1
    RadiusToN,    // radius variant: r -> n once r reached n/2
    Reset         // SD variants: strength/radius/counter reset on improvement
};

struct TraceEvent {
    uint64_t evaluation; // 1-based index of the evaluation that caused it
    TraceEventType type;
    uint32_t value; // new strength or radius where applicable, else 0
};

struct RunOptions {
    bool record_events = false;
    bool record_visits = false; // store start point and every accepted move
    bool stop_at_first_improvement = false;
};

struct RunResult {
    uint64_t evaluations = 0;
    bool success = false;  // optimum reached
    bool censored = false; // budget exhausted first
    Fitness best_fitness = 0;
    uint64_t strict_improvements = 0;
    // Largest flip strength the run ever used: s for RlsStatic, 2 for Rls12,
    // max s for the SD locals, max rate-strength for SdEa, 0 for the
    // standard-bit-mutation algorithms (no meaningful strength).
    uint32_t max_strength_seen = 0;
    std::vector<TraceEvent> events;
    std::vector<BitString> visits;
};

using Initializer = std::function<BitString(const Problem&, RandomSource&)>;

// One elitist run: draw the start point (uniform unless an initializer is
// given), evaluate it (evaluation 1), then step the configured variant until
// the optimum is hit or the budget is spent. Pure function of its arguments.
RunResult run_trial(const AlgorithmConfig& cfg, const Problem& problem,
                    uint64_t budget, uint64_t seed, const RunOptions& options = {},
                    const Initializer& init = {});

// Stagnation threshold of the rate-based variant at rate-strength r:
// (n/r)^r * (n/(n-r))^(n-r) * ln(R) * multiplier, computed in log space and
// saturated to +infinity like the s-flip threshold.
double sd_ea_threshold(unsigned n, unsigned r, double R, double multiplier);

} // namespace sdrls
