#include "sdrls/harness.hpp"

#include "sdrls/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace sdrls {

namespace {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

[[noreturn]] void bad_field(const std::string& what, const std::string& got) {
    throw std::invalid_argument(what + ": cannot parse '" + got + "'");
}

uint64_t parse_u64(const std::string& s, const std::string& what) {
    uint64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) bad_field(what, s);
    return v;
}

unsigned parse_u32(const std::string& s, const std::string& what) {
    const uint64_t v = parse_u64(s, what);
    if (v > std::numeric_limits<unsigned>::max()) bad_field(what, s);
    return static_cast<unsigned>(v);
}

double parse_double(const std::string& s, const std::string& what) {
    double v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) bad_field(what, s);
    return v;
}

bool parse_bool(const std::string& s, const std::string& what) {
    if (s == "true") return true;
    if (s == "false") return false;
    bad_field(what, s);
}

std::string format_double(double v) {
    char buf[40];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

void check_csv_safe(const std::string& s, const char* field) {
    if (s.find(',') != std::string::npos || s.find('\n') != std::string::npos ||
        s.find('\r') != std::string::npos)
        throw std::invalid_argument(std::string(field) +
                                    ": must not contain commas or line breaks");
}

std::optional<unsigned> record_m(const ProblemSpec& spec, const Problem& p) {
    if (spec.name == "jump") return spec.m;
    if (spec.name == "needglobalmut")
        return NeedGlobalMutLayout::for_n(spec.n).suffix_length;
    if (spec.name == "mst-tg" || spec.name == "mst-er") return p.n();
    return std::nullopt;
}

Initializer make_initializer(const Problem& problem, MstInit mst_init) {
    if (mst_init != MstInit::SpanningTree) return {};
    const auto* mst = dynamic_cast<const MstProblem*>(&problem);
    if (!mst)
        throw std::invalid_argument(
            "mst_init: spanning-tree start needs a spanning-tree problem");
    const WeightedGraph* g = &mst->graph();
    return [g](const Problem&, RandomSource& rng) {
        return random_spanning_tree(*g, rng);
    };
}

struct Runner {
    const ProblemSpec& spec;
    const Problem& problem;
    std::string experiment_id;
    unsigned repetitions;
    uint64_t budget;
    uint64_t base_seed;
    bool trace;
    unsigned workers;
    std::optional<unsigned> m_col;
    Initializer init;

    TrialRecord run_one(const AlgorithmConfig& algo, uint64_t cell_index,
                        unsigned trial) const {
        const uint64_t seed =
            RandomSource::derive(base_seed, cell_index * repetitions + trial);
        RunOptions opt;
        opt.record_events = trace;
        const auto t0 = std::chrono::steady_clock::now();
        const RunResult r = run_trial(algo, problem, budget, seed, opt, init);
        const auto t1 = std::chrono::steady_clock::now();

        TrialRecord rec;
        rec.experiment_id = experiment_id;
        rec.algorithm = algo.label.empty() ? variant_name(algo.variant) : algo.label;
        rec.problem = spec.name;
        rec.n = spec.n;
        rec.m = m_col;
        switch (algo.variant) {
        case Variant::SdRls:
        case Variant::SdRlsStar:
        case Variant::SdEa:
            rec.R = algo.resolved_R(problem);
            break;
        case Variant::FeaBeta:
            rec.beta = algo.beta;
            break;
        case Variant::EaOneOne:
            rec.rate = algo.resolved_rate(problem.n());
            break;
        default:
            break;
        }
        rec.seed = seed;
        rec.trial_index = trial;
        rec.evaluations = r.evaluations;
        rec.success = r.success;
        rec.censored = r.censored;
        rec.strict_improvements = r.strict_improvements;
        rec.max_strength_seen = r.max_strength_seen;
        rec.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        return rec;
    }

    std::vector<TrialRecord> run_cell(const AlgorithmConfig& algo,
                                      uint64_t cell_index) const {
        std::vector<TrialRecord> rows(repetitions);
        std::atomic<unsigned> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto body = [&] {
            try {
                for (;;) {
                    const unsigned t = next.fetch_add(1, std::memory_order_relaxed);
                    if (t >= repetitions) return;
                    rows[t] = run_one(algo, cell_index, t);
                }
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        };
        const unsigned pool_size = std::min(workers, repetitions);
        if (pool_size <= 1) {
            body();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(pool_size);
            for (unsigned i = 0; i < pool_size; ++i) pool.emplace_back(body);
            for (auto& th : pool) th.join();
        }
        if (error) std::rethrow_exception(error);
        return rows;
    }
};

void validate_common(const std::string& experiment_id, unsigned repetitions,
                     uint64_t budget, unsigned workers) {
    check_csv_safe(experiment_id, "experiment_id");
    if (repetitions < 1)
        throw std::invalid_argument("repetitions: must be >= 1");
    if (budget < 1) throw std::invalid_argument("budget: must be >= 1");
    if (workers < 1) throw std::invalid_argument("workers: must be >= 1");
}

void emit_cell(std::ostream* sink, const std::vector<TrialRecord>& rows) {
    if (!sink) return;
    for (const TrialRecord& r : rows) write_csv_row(*sink, r);
    sink->flush();
}

} // namespace

std::unique_ptr<Problem> make_problem(const ProblemSpec& spec) {
    if (spec.name == "onemax") {
        if (spec.n < 1) throw std::invalid_argument("n: onemax needs n >= 1");
        return std::make_unique<OneMax>(spec.n);
    }
    if (spec.name == "jump") {
        if (spec.n < 1) throw std::invalid_argument("n: jump needs n >= 1");
        if (spec.m < 1 || spec.m > spec.n)
            throw std::invalid_argument("m: jump needs 1 <= m <= n");
        return std::make_unique<Jump>(spec.n, spec.m);
    }
    if (spec.name == "needglobalmut") {
        return std::make_unique<NeedGlobalMut>(spec.n); // throws naming n
    }
    if (spec.name == "mst-tg") {
        return std::make_unique<MstProblem>(tg_graph(spec.n)); // throws naming n
    }
    if (spec.name == "mst-er") {
        RandomSource rng(spec.graph_seed);
        return std::make_unique<MstProblem>(erdos_renyi(spec.n, rng));
    }
    throw std::invalid_argument("problem: unknown name '" + spec.name + "'");
}

std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg, std::ostream* sink) {
    validate_common(cfg.experiment_id, cfg.repetitions, cfg.budget, cfg.workers);
    if (cfg.algorithms.empty())
        throw std::invalid_argument("algorithms: at least one entry required");
    const auto problem = make_problem(cfg.problem);
    for (const AlgorithmConfig& a : cfg.algorithms) {
        a.validate(*problem);
        check_csv_safe(a.label, "label");
    }
    const Runner runner{cfg.problem,
                        *problem,
                        cfg.experiment_id,
                        cfg.repetitions,
                        cfg.budget,
                        cfg.base_seed,
                        cfg.trace,
                        cfg.workers,
                        record_m(cfg.problem, *problem),
                        make_initializer(*problem, cfg.mst_init)};
    if (sink) write_csv_header(*sink);
    std::vector<TrialRecord> all;
    all.reserve(size_t(cfg.repetitions) * cfg.algorithms.size());
    for (size_t cell = 0; cell < cfg.algorithms.size(); ++cell) {
        auto rows = runner.run_cell(cfg.algorithms[cell], cell);
        emit_cell(sink, rows);
        std::move(rows.begin(), rows.end(), std::back_inserter(all));
    }
    return all;
}

std::vector<TrialRecord> run_sweep(const SweepPlan& plan, std::ostream* sink) {
    validate_common(plan.experiment_id, plan.repetitions, plan.budget, plan.workers);
    if (plan.ns.empty()) throw std::invalid_argument("n: sweep needs at least one value");
    if (plan.algorithm_tokens.empty())
        throw std::invalid_argument("algos: sweep needs at least one token");
    if (sink) write_csv_header(*sink);
    std::vector<TrialRecord> all;
    for (size_t ni = 0; ni < plan.ns.size(); ++ni) {
        ProblemSpec spec = plan.problem;
        spec.n = plan.ns[ni];
        const auto problem = make_problem(spec);
        std::vector<AlgorithmConfig> algos;
        algos.reserve(plan.algorithm_tokens.size());
        for (const std::string& token : plan.algorithm_tokens) {
            algos.push_back(parse_algorithm_token(token, spec));
            algos.back().validate(*problem);
            check_csv_safe(algos.back().label, "label");
        }
        const Runner runner{spec,
                            *problem,
                            plan.experiment_id,
                            plan.repetitions,
                            plan.budget,
                            plan.base_seed,
                            false,
                            plan.workers,
                            record_m(spec, *problem),
                            make_initializer(*problem, plan.mst_init)};
        for (size_t ai = 0; ai < algos.size(); ++ai) {
            const uint64_t cell = ni * algos.size() + ai;
            auto rows = runner.run_cell(algos[ai], cell);
            emit_cell(sink, rows);
            std::move(rows.begin(), rows.end(), std::back_inserter(all));
        }
    }
    return all;
}

AlgorithmConfig parse_algorithm_token(const std::string& token,
                                      const ProblemSpec& problem) {
    AlgorithmConfig c;
    c.label = token;
    if (token == "rls12") {
        c.variant = Variant::Rls12;
        return c;
    }
    if (token == "rls" || token == "rls-static") {
        c.variant = Variant::RlsStatic;
        c.s = 1;
        return c;
    }
    if (token.rfind("rls", 0) == 0 &&
        token.size() > 3 &&
        std::all_of(token.begin() + 3, token.end(),
                    [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        c.variant = Variant::RlsStatic;
        c.s = parse_u32(token.substr(3), "algos: rls strength");
        if (c.s < 1)
            throw std::invalid_argument("algos: rls strength must be >= 1");
        return c;
    }
    if (token == "sd-rls") {
        c.variant = Variant::SdRls;
        return c;
    }
    if (token == "sd-rls-star") {
        c.variant = Variant::SdRlsStar;
        return c;
    }
    if (token == "sd-ea") {
        c.variant = Variant::SdEa;
        return c;
    }
    if (token == "ea") {
        c.variant = Variant::EaOneOne;
        return c;
    }
    if (token == "ea-mn") {
        c.variant = Variant::EaOneOne;
        if (problem.m < 1)
            throw std::invalid_argument(
                "algos: ea-mn needs a problem with parameter m");
        if (problem.n < 1)
            throw std::invalid_argument("algos: ea-mn needs a problem size n");
        c.rate = double(problem.m) / double(problem.n);
        return c;
    }
    if (token.rfind("fea", 0) == 0) {
        c.variant = Variant::FeaBeta;
        if (token.size() > 3)
            c.beta = parse_double(token.substr(3), "algos: fea exponent");
        return c;
    }
    throw std::invalid_argument("algos: unknown algorithm token '" + token + "'");
}

const char* const kCsvHeader =
    "experiment_id,algorithm,problem,n,m,R,beta,rate,seed,trial_index,"
    "evaluations,success,censored,strict_improvements,max_strength_seen,"
    "wall_time_ms";

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, const TrialRecord& r) {
    out << r.experiment_id << ',' << r.algorithm << ',' << r.problem << ','
        << r.n << ',';
    if (r.m) out << *r.m;
    out << ',';
    if (r.R) out << format_double(*r.R);
    out << ',';
    if (r.beta) out << format_double(*r.beta);
    out << ',';
    if (r.rate) out << format_double(*r.rate);
    out << ',' << r.seed << ',' << r.trial_index << ',' << r.evaluations << ','
        << (r.success ? "true" : "false") << ','
        << (r.censored ? "true" : "false") << ',' << r.strict_improvements
        << ',' << r.max_strength_seen << ',' << format_double(r.wall_time_ms)
        << '\n';
}

std::string to_csv(const std::vector<TrialRecord>& records) {
    std::ostringstream out;
    write_csv_header(out);
    for (const TrialRecord& r : records) write_csv_row(out, r);
    return out.str();
}

std::vector<TrialRecord> parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader) throw std::runtime_error("csv: unexpected header");
    std::vector<TrialRecord> records;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto where = [lineno](const char* field) {
            return "csv line " + std::to_string(lineno) + ": " + field;
        };
        const auto f = split(line, ',');
        if (f.size() != 16)
            throw std::runtime_error(where("expected 16 fields"));
        TrialRecord r;
        r.experiment_id = f[0];
        r.algorithm = f[1];
        r.problem = f[2];
        r.n = parse_u32(f[3], where("n"));
        if (!f[4].empty()) r.m = parse_u32(f[4], where("m"));
        if (!f[5].empty()) r.R = parse_double(f[5], where("R"));
        if (!f[6].empty()) r.beta = parse_double(f[6], where("beta"));
        if (!f[7].empty()) r.rate = parse_double(f[7], where("rate"));
        r.seed = parse_u64(f[8], where("seed"));
        r.trial_index = parse_u32(f[9], where("trial_index"));
        r.evaluations = parse_u64(f[10], where("evaluations"));
        r.success = parse_bool(f[11], where("success"));
        r.censored = parse_bool(f[12], where("censored"));
        r.strict_improvements = parse_u64(f[13], where("strict_improvements"));
        r.max_strength_seen = parse_u32(f[14], where("max_strength_seen"));
        r.wall_time_ms = parse_double(f[15], where("wall_time_ms"));
        records.push_back(std::move(r));
    }
    return records;
}

ExperimentConfig parse_config_file(std::istream& in) {
    ExperimentConfig cfg;
    struct Section {
        std::vector<std::pair<std::string, std::string>> kv;
    };
    std::vector<std::pair<std::string, std::string>> globals;
    std::vector<Section> sections;
    bool in_section = false;

    std::string raw;
    size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line == "[algorithm]") {
            sections.emplace_back();
            in_section = true;
            continue;
        }
        if (line.front() == '[')
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown section '" + line + "'");
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": empty key");
        if (in_section)
            sections.back().kv.emplace_back(key, value);
        else
            globals.emplace_back(key, value);
    }

    for (const auto& [key, value] : globals) {
        if (key == "experiment_id") cfg.experiment_id = value;
        else if (key == "problem") cfg.problem.name = value;
        else if (key == "n") cfg.problem.n = parse_u32(value, "config n");
        else if (key == "m") cfg.problem.m = parse_u32(value, "config m");
        else if (key == "graph_seed") cfg.problem.graph_seed = parse_u64(value, "config graph_seed");
        else if (key == "repetitions") cfg.repetitions = parse_u32(value, "config repetitions");
        else if (key == "budget") cfg.budget = parse_u64(value, "config budget");
        else if (key == "seed") cfg.base_seed = parse_u64(value, "config seed");
        else if (key == "workers") cfg.workers = parse_u32(value, "config workers");
        else if (key == "trace") cfg.trace = parse_bool(value, "config trace");
        else if (key == "out") cfg.out_path = value;
        else if (key == "mst_init") {
            if (value == "bitstring") cfg.mst_init = MstInit::RandomBitstring;
            else if (value == "spanning-tree") cfg.mst_init = MstInit::SpanningTree;
            else bad_field("config mst_init", value);
        } else {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }

    for (const Section& sec : sections) {
        std::string variant_token;
        for (const auto& [key, value] : sec.kv)
            if (key == "variant") variant_token = value;
        if (variant_token.empty())
            throw std::invalid_argument("config: [algorithm] section needs a variant key");
        AlgorithmConfig algo = parse_algorithm_token(variant_token, cfg.problem);
        for (const auto& [key, value] : sec.kv) {
            if (key == "variant") continue;
            else if (key == "s") algo.s = parse_u32(value, "config s");
            else if (key == "rate") algo.rate = parse_double(value, "config rate");
            else if (key == "beta") algo.beta = parse_double(value, "config beta");
            else if (key == "R") algo.R = parse_double(value, "config R");
            else if (key == "threshold_multiplier")
                algo.threshold_multiplier = parse_double(value, "config threshold_multiplier");
            else if (key == "label") algo.label = value;
            else
                throw std::invalid_argument("config: unknown algorithm key '" + key + "'");
        }
        cfg.algorithms.push_back(std::move(algo));
    }
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    return parse_config_file(in);
}

std::vector<CellSummary> summarize(const std::vector<TrialRecord>& records) {
    using Key = std::tuple<std::string, std::string, unsigned, std::optional<unsigned>>;
    std::map<Key, size_t> index;
    std::vector<CellSummary> out;
    std::vector<std::vector<double>> all_evals;
    std::vector<std::vector<double>> success_evals;

    for (const TrialRecord& r : records) {
        const Key key{r.algorithm, r.problem, r.n, r.m};
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, out.size()).first;
            CellSummary s;
            s.algorithm = r.algorithm;
            s.problem = r.problem;
            s.n = r.n;
            s.m = r.m;
            out.push_back(std::move(s));
            all_evals.emplace_back();
            success_evals.emplace_back();
        }
        const size_t i = it->second;
        ++out[i].count;
        if (r.success) ++out[i].successes;
        if (r.censored) ++out[i].censored;
        all_evals[i].push_back(double(r.evaluations));
        if (r.success) success_evals[i].push_back(double(r.evaluations));
    }
    for (size_t i = 0; i < out.size(); ++i) {
        out[i].mean_all = mean(all_evals[i]);
        out[i].median_all = median(all_evals[i]);
        out[i].std_all = std_dev(all_evals[i]);
        if (success_evals[i].empty()) {
            const double nan = std::numeric_limits<double>::quiet_NaN();
            out[i].mean_success = nan;
            out[i].median_success = nan;
            out[i].std_success = nan;
        } else {
            out[i].mean_success = mean(success_evals[i]);
            out[i].median_success = median(success_evals[i]);
            out[i].std_success = std_dev(success_evals[i]);
        }
    }
    return out;
}

CellSelector parse_cell_selector(const std::string& text) {
    const auto parts = split(text, ',');
    CellSelector sel;
    sel.algorithm = trim(parts[0]);
    if (sel.algorithm.empty())
        throw std::invalid_argument("cell selector: empty algorithm label in '" + text + "'");
    for (size_t i = 1; i < parts.size(); ++i) {
        const std::string part = trim(parts[i]);
        const auto eq = part.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("cell selector: expected key=value, got '" + part + "'");
        const std::string key = trim(part.substr(0, eq));
        const std::string value = trim(part.substr(eq + 1));
        if (key == "n") sel.n = parse_u32(value, "cell selector n");
        else if (key == "m") sel.m = parse_u32(value, "cell selector m");
        else if (key == "problem") sel.problem = value;
        else
            throw std::invalid_argument("cell selector: unknown key '" + key + "'");
    }
    return sel;
}

std::vector<double> select_evaluations(const std::vector<TrialRecord>& records,
                                       const CellSelector& sel) {
    std::vector<double> out;
    for (const TrialRecord& r : records) {
        if (r.algorithm != sel.algorithm) continue;
        if (sel.n && r.n != *sel.n) continue;
        if (sel.m && r.m != sel.m) continue;
        if (sel.problem && r.problem != *sel.problem) continue;
        out.push_back(double(r.evaluations));
    }
    return out;
}

} // namespace sdrls
