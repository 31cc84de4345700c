#pragma once

#include "sdrls/algorithm.hpp"
#include "sdrls/problem.hpp"

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sdrls {

enum class MstInit { RandomBitstring, SpanningTree };

// Instance selector. n is the published instance parameter: bit-string
// length for the bit-string problems, vertex count for the spanning-tree
// instances (whose search space is the edge set).
struct ProblemSpec {
    std::string name;        // onemax | jump | needglobalmut | mst-tg | mst-er
    unsigned n = 0;
    unsigned m = 0;          // jump only
    uint64_t graph_seed = 0; // mst-er only
};

// Throws invalid_argument naming the offending field.
std::unique_ptr<Problem> make_problem(const ProblemSpec& spec);

struct ExperimentConfig {
    std::string experiment_id;
    ProblemSpec problem;
    std::vector<AlgorithmConfig> algorithms; // one cell each
    unsigned repetitions = 0;
    uint64_t budget = 0;
    uint64_t base_seed = 1;
    bool trace = false; // record trace events during trials (not persisted)
    MstInit mst_init = MstInit::RandomBitstring;
    unsigned workers = 1;
    std::string out_path; // consumed by the CLI, not by run_experiment
};

struct TrialRecord {
    std::string experiment_id;
    std::string algorithm;
    std::string problem;
    unsigned n = 0;
    std::optional<unsigned> m;    // jump m / suffix length / edge count
    std::optional<double> R;      // stagnation variants: resolved value
    std::optional<double> beta;   // heavy-tailed variant
    std::optional<double> rate;   // fixed-rate variant: resolved value
    uint64_t seed = 0;
    unsigned trial_index = 0;
    uint64_t evaluations = 0;
    bool success = false;
    bool censored = false;
    uint64_t strict_improvements = 0;
    uint32_t max_strength_seen = 0;
    double wall_time_ms = 0.0; // informational; excluded from determinism

    bool operator==(const TrialRecord&) const = default;
};

// Cells run sequentially in config order; trials inside a cell are spread
// over `workers` threads. Per-trial seed is derive(base_seed,
// cell_index * repetitions + trial_index), so rows are a pure function of
// the config (wall_time_ms aside) regardless of scheduling. Rows come back
// sorted by (cell, trial_index); with a sink they are also streamed there,
// header first, as each cell completes.
std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg,
                                        std::ostream* sink = nullptr);

struct SweepPlan {
    std::string experiment_id;
    ProblemSpec problem; // n overridden per sweep point
    std::vector<unsigned> ns;
    std::vector<std::string> algorithm_tokens;
    unsigned repetitions = 0;
    uint64_t budget = 0;
    uint64_t base_seed = 1;
    MstInit mst_init = MstInit::RandomBitstring;
    unsigned workers = 1;
};

// One cell per (n, algorithm), cell_index = n_index * |tokens| + token_index.
std::vector<TrialRecord> run_sweep(const SweepPlan& plan, std::ostream* sink = nullptr);

// Token grammar: rls | rls<k> | rls12 | rls-static | sd-rls | sd-rls-star |
// sd-ea | ea | ea-mn | fea | fea<beta>. "rls12" is always the 1-or-2-bit
// sampler; static strengths come from rls<k> (k != 12) or a config section.
// "ea-mn" resolves rate = m/n from the problem spec. The token becomes the
// config's label.
AlgorithmConfig parse_algorithm_token(const std::string& token,
                                      const ProblemSpec& problem);

// CSV schema (fixed): header row, LF endings, empty fields for unset
// optionals, booleans true/false, doubles in shortest round-trip form.
extern const char* const kCsvHeader;
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const TrialRecord& r);
std::string to_csv(const std::vector<TrialRecord>& records);
std::vector<TrialRecord> parse_csv(std::istream& in);

// Flat key-value config with one [algorithm] section per cell; full-line
// # comments; global keys before the first section.
ExperimentConfig parse_config_file(std::istream& in);
ExperimentConfig load_config_file(const std::string& path);

struct CellSummary {
    std::string algorithm;
    std::string problem;
    unsigned n = 0;
    std::optional<unsigned> m;
    std::size_t count = 0;
    std::size_t successes = 0;
    std::size_t censored = 0;
    // over successful trials only; NaN when there are none
    double mean_success = 0, median_success = 0, std_success = 0;
    // over all trials, censored ones standing at the budget they consumed
    double mean_all = 0, median_all = 0, std_all = 0;
};

// One row per (algorithm, problem, n, m) in first-seen order.
std::vector<CellSummary> summarize(const std::vector<TrialRecord>& records);

// "label[,n=..][,m=..][,problem=..]" picks a cell out of a record set.
struct CellSelector {
    std::string algorithm;
    std::optional<unsigned> n;
    std::optional<unsigned> m;
    std::optional<std::string> problem;
};

CellSelector parse_cell_selector(const std::string& text);
std::vector<double> select_evaluations(const std::vector<TrialRecord>& records,
                                       const CellSelector& sel);

} // namespace sdrls
