#include "sdrls/algorithm.hpp"

#include "sdrls/combinatorics.hpp"
#include "sdrls/mutation.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace sdrls {

const char* variant_name(Variant v) {
    switch (v) {
    case Variant::RlsStatic: return "rls-static";
    case Variant::Rls12: return "rls12";
    case Variant::SdRls: return "sd-rls";
    case Variant::SdRlsStar: return "sd-rls-star";
    case Variant::EaOneOne: return "ea";
    case Variant::FeaBeta: return "fea";
    case Variant::SdEa: return "sd-ea";
    }
    return "?";
}

double AlgorithmConfig::resolved_R(const Problem& p) const {
    if (R > 0.0) return R;
    switch (variant) {
    case Variant::SdRls:
    case Variant::SdEa: return p.image_size_bound();
    case Variant::SdRlsStar: {
        const double n = p.n();
        return n * n * n * p.image_size_bound();
    }
    default: return 0.0;
    }
}

double AlgorithmConfig::resolved_rate(unsigned n) const {
    return rate > 0.0 ? rate : 1.0 / double(n);
}

void AlgorithmConfig::validate(const Problem& p) const {
    const unsigned n = p.n();
    switch (variant) {
    case Variant::RlsStatic:
        if (s < 1 || s > n)
            throw std::invalid_argument("algorithm config: s must be in [1, n]");
        break;
    case Variant::Rls12:
        if (n < 2)
            throw std::invalid_argument("algorithm config: rls12 needs n >= 2");
        break;
    case Variant::EaOneOne: {
        const double p_flip = resolved_rate(n);
        if (!(p_flip > 0.0) || p_flip > 1.0)
            throw std::invalid_argument("algorithm config: rate must be in (0, 1]");
        break;
    }
    case Variant::FeaBeta:
        if (!(beta > 1.0))
            throw std::invalid_argument("algorithm config: beta must be > 1");
        if (n < 2)
            throw std::invalid_argument("algorithm config: heavy-tailed mutation needs n >= 2");
        break;
    case Variant::SdRls:
    case Variant::SdRlsStar:
    case Variant::SdEa:
        if (!(resolved_R(p) > 1.0))
            throw std::invalid_argument("algorithm config: R must be > 1");
        if (!(threshold_multiplier > 0.0))
            throw std::invalid_argument("algorithm config: threshold_multiplier must be positive");
        break;
    }
}

double sd_ea_threshold(unsigned n, unsigned r, double R, double multiplier) {
    if (!(R > 1.0)) throw std::invalid_argument("sd_ea_threshold: R must be > 1");
    if (r < 1 || r > n) throw std::invalid_argument("sd_ea_threshold: r must be in [1, n]");
    const double ln_n = std::log(double(n));
    double t = double(r) * (ln_n - std::log(double(r)));
    if (r < n) t += double(n - r) * (ln_n - std::log(double(n - r)));
    t += std::log(std::log(R)) + std::log(multiplier);
    if (t >= 709.0) return std::numeric_limits<double>::infinity();
    return std::exp(t);
}

namespace {

void push_event(RunResult& res, const RunOptions& opt, TraceEventType type, uint32_t value) {
    if (opt.record_events) res.events.push_back({res.evaluations, type, value});
}

struct RlsStaticStepper {
    unsigned s;
    std::vector<uint32_t> flipped;

    void propose(BitString& x, RandomSource& rng) {
        flip_uniform_subset(x, s, rng, flipped);
    }
    bool accepts_equal() const { return true; }
    void on_improve(RunResult&, const RunOptions&) {}
    void on_unsuccessful(RunResult&, const RunOptions&) {}
};

struct Rls12Stepper {
    std::vector<uint32_t> flipped;

    void propose(BitString& x, RandomSource& rng) {
        flip_uniform_subset(x, rng.coin() ? 1 : 2, rng, flipped);
    }
    bool accepts_equal() const { return true; }
    void on_improve(RunResult&, const RunOptions&) {}
    void on_unsuccessful(RunResult&, const RunOptions&) {}
};

struct SdRlsStepper {
    unsigned n;
    double R;
    unsigned s = 1;
    uint64_t u = 0;
    double thr;
    std::vector<uint32_t> flipped;

    SdRlsStepper(unsigned n_, double R_) : n(n_), R(R_), thr(sd_threshold(n_, 1, R_)) {}

    void propose(BitString& x, RandomSource& rng) {
        flip_uniform_subset(x, s, rng, flipped);
    }
    bool accepts_equal() const { return s == 1; }
    void on_improve(RunResult& res, const RunOptions& opt) {
        s = 1;
        u = 0;
        thr = sd_threshold(n, 1, R);
        push_event(res, opt, TraceEventType::Reset, 1);
    }
    void on_unsuccessful(RunResult& res, const RunOptions& opt) {
        if (double(++u) > thr) {
            s = std::min(s + 1, n);
            u = 0;
            thr = sd_threshold(n, s, R);
            res.max_strength_seen = std::max(res.max_strength_seen, s);
            push_event(res, opt, TraceEventType::StrengthUp, s);
        }
    }
};

struct SdRlsStarStepper {
    unsigned n;
    double R;
    unsigned s = 1;
    unsigned r = 1;
    uint64_t u = 0;
    double thr;
    std::vector<uint32_t> flipped;

    SdRlsStarStepper(unsigned n_, double R_) : n(n_), R(R_), thr(sd_threshold(n_, 1, R_)) {}

    void propose(BitString& x, RandomSource& rng) {
        flip_uniform_subset(x, s, rng, flipped);
    }
    bool accepts_equal() const { return r == 1; }
    void on_improve(RunResult& res, const RunOptions& opt) {
        s = 1;
        r = 1;
        u = 0;
        thr = sd_threshold(n, 1, R);
        push_event(res, opt, TraceEventType::Reset, 1);
    }
    void on_unsuccessful(RunResult& res, const RunOptions& opt) {
        if (double(++u) > thr) {
            if (s == 1) {
                if (2ull * r < n) {
                    ++r;
                    s = r;
                    push_event(res, opt, TraceEventType::RadiusUp, r);
                } else {
                    r = n;
                    s = n;
                    push_event(res, opt, TraceEventType::RadiusToN, r);
                }
            } else {
                --s;
                push_event(res, opt, TraceEventType::StrengthDown, s);
            }
            u = 0;
            thr = sd_threshold(n, s, R);
            res.max_strength_seen = std::max(res.max_strength_seen, s);
        }
    }
};

struct EaStepper {
    BinomialCount counts;
    std::vector<uint32_t> flipped;

    EaStepper(unsigned n, double rate) : counts(n, rate) {}

    void propose(BitString& x, RandomSource& rng) {
        flip_uniform_subset(x, counts.sample(rng), rng, flipped);
    }
    bool accepts_equal() const { return true; }
    void on_improve(RunResult&, const RunOptions&) {}
    void on_unsuccessful(RunResult&, const RunOptions&) {}
};

struct FeaStepper {
    unsigned n;
    PowerLawAlpha law;
    std::vector<std::unique_ptr<BinomialCount>> tables; // per alpha, lazy
    std::vector<uint32_t> flipped;

    FeaStepper(unsigned n_, double beta) : n(n_), law(n_ / 2, beta), tables(n_ / 2 + 1) {}

    void propose(BitString& x, RandomSource& rng) {
        const unsigned alpha = law.sample(rng);
        if (!tables[alpha])
            tables[alpha] = std::make_unique<BinomialCount>(n, double(alpha) / double(n));
        flip_uniform_subset(x, tables[alpha]->sample(rng), rng, flipped);
    }
    bool accepts_equal() const { return true; }
    void on_improve(RunResult&, const RunOptions&) {}
    void on_unsuccessful(RunResult&, const RunOptions&) {}
};

struct SdEaStepper {
    unsigned n;
    double R;
    double multiplier;
    unsigned cap; // rate-strength never exceeds floor(n/2)
    unsigned r = 1;
    uint64_t u = 0;
    double thr;
    std::vector<std::unique_ptr<BinomialCount>> tables; // per rate-strength, lazy
    std::vector<uint32_t> flipped;

    SdEaStepper(unsigned n_, double R_, double mult)
        : n(n_), R(R_), multiplier(mult), cap(std::max(1u, n_ / 2)),
          thr(sd_ea_threshold(n_, 1, R_, mult)), tables(cap + 1) {}

    BinomialCount& table(unsigned rr) {
        if (!tables[rr])
            tables[rr] = std::make_unique<BinomialCount>(n, double(rr) / double(n));
        return *tables[rr];
    }
    void propose(BitString& x, RandomSource& rng) {
        flip_uniform_subset(x, table(r).sample(rng), rng, flipped);
    }
    bool accepts_equal() const { return r == 1; }
    void on_improve(RunResult& res, const RunOptions& opt) {
        r = 1;
        u = 0;
        thr = sd_ea_threshold(n, 1, R, multiplier);
        push_event(res, opt, TraceEventType::Reset, 1);
    }
    void on_unsuccessful(RunResult& res, const RunOptions& opt) {
        if (double(++u) > thr) {
            r = std::min(r + 1, cap);
            u = 0;
            thr = sd_ea_threshold(n, r, R, multiplier);
            res.max_strength_seen = std::max(res.max_strength_seen, r);
            push_event(res, opt, TraceEventType::StrengthUp, r);
        }
    }
};

template <typename Stepper>
void drive(Stepper& st, const Problem& problem, uint64_t budget, RandomSource& rng,
           const RunOptions& opt, BitString& x, Fitness& fx, RunResult& res) {
    while (res.evaluations < budget) {
        st.propose(x, rng);
        const Fitness fy = problem.evaluate(x);
        ++res.evaluations;
        if (problem.better(fy, fx)) {
            fx = fy;
            ++res.strict_improvements;
            push_event(res, opt, TraceEventType::Improve, 0);
            st.on_improve(res, opt); // threshold check skipped this step
            if (opt.record_visits) res.visits.push_back(x);
            if (problem.is_optimum(x)) {
                res.success = true;
                break;
            }
            if (opt.stop_at_first_improvement) break;
            continue;
        }
        if (fy == fx && st.accepts_equal()) {
            if (!st.flipped.empty()) {
                push_event(res, opt, TraceEventType::EqualMove, 0);
                if (opt.record_visits) res.visits.push_back(x);
            }
        } else {
            for (uint32_t i : st.flipped) x.flip(i); // reject: undo the move
        }
        st.on_unsuccessful(res, opt);
    }
    if (!res.success) res.censored = res.evaluations >= budget;
    res.best_fitness = fx;
}

} // namespace

RunResult run_trial(const AlgorithmConfig& cfg, const Problem& problem, uint64_t budget,
                    uint64_t seed, const RunOptions& opt, const Initializer& init) {
    if (budget < 1) throw std::invalid_argument("run_trial: budget must be >= 1");
    cfg.validate(problem);
    const unsigned n = problem.n();

    RandomSource rng(seed);
    BitString x = init ? init(problem, rng) : BitString::random(n, rng);
    if (x.size() != n)
        throw std::invalid_argument("run_trial: initializer produced wrong length");

    RunResult res;
    Fitness fx = problem.evaluate(x);
    res.evaluations = 1;
    res.best_fitness = fx;
    if (opt.record_visits) res.visits.push_back(x);
    if (problem.is_optimum(x)) {
        res.success = true;
        return res;
    }
    if (res.evaluations >= budget) {
        res.censored = true;
        return res;
    }

    switch (cfg.variant) {
    case Variant::RlsStatic: {
        RlsStaticStepper st{cfg.s, {}};
        res.max_strength_seen = cfg.s;
        drive(st, problem, budget, rng, opt, x, fx, res);
        break;
    }
    case Variant::Rls12: {
        Rls12Stepper st;
        res.max_strength_seen = 2;
        drive(st, problem, budget, rng, opt, x, fx, res);
        break;
    }
    case Variant::SdRls: {
        SdRlsStepper st(n, cfg.resolved_R(problem));
        res.max_strength_seen = 1;
        drive(st, problem, budget, rng, opt, x, fx, res);
        break;
    }
    case Variant::SdRlsStar: {
        SdRlsStarStepper st(n, cfg.resolved_R(problem));
        res.max_strength_seen = 1;
        drive(st, problem, budget, rng, opt, x, fx, res);
        break;
    }
    case Variant::EaOneOne: {
        EaStepper st(n, cfg.resolved_rate(n));
        drive(st, problem, budget, rng, opt, x, fx, res);
        break;
    }
    case Variant::FeaBeta: {
        FeaStepper st(n, cfg.beta);
        drive(st, problem, budget, rng, opt, x, fx, res);
        break;
    }
    case Variant::SdEa: {
        SdEaStepper st(n, cfg.resolved_R(problem), cfg.threshold_multiplier);
        res.max_strength_seen = 1;
        drive(st, problem, budget, rng, opt, x, fx, res);
        break;
    }
    }
    return res;
}

} // namespace sdrls
