#include "sdrls/cli.hpp"

#include "sdrls/graph.hpp"
#include "sdrls/harness.hpp"
#include "sdrls/stats.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sdrls::cli {

namespace {

std::vector<std::string> split_list(const std::string& text, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == sep) {
            std::string part = text.substr(start, i - start);
            const auto b = part.find_first_not_of(" \t");
            const auto e = part.find_last_not_of(" \t");
            out.push_back(b == std::string::npos ? std::string()
                                                 : part.substr(b, e - b + 1));
            start = i + 1;
        }
    }
    return out;
}

unsigned to_u32(const std::string& s, const std::string& what) {
    unsigned v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::invalid_argument(what + ": cannot parse '" + s + "'");
    return v;
}

// "80" | "80,100,120" | "80:160:20" (inclusive stop)
std::vector<unsigned> parse_n_values(const std::string& text) {
    std::vector<unsigned> ns;
    if (text.find(':') != std::string::npos) {
        const auto parts = split_list(text, ':');
        if (parts.size() != 3)
            throw std::invalid_argument("n: range must be start:stop:step, got '" + text + "'");
        const unsigned start = to_u32(parts[0], "n start");
        const unsigned stop = to_u32(parts[1], "n stop");
        const unsigned step = to_u32(parts[2], "n step");
        if (step == 0) throw std::invalid_argument("n: step must be >= 1");
        for (uint64_t v = start; v <= stop; v += step)
            ns.push_back(static_cast<unsigned>(v));
    } else {
        for (const std::string& part : split_list(text, ','))
            if (!part.empty()) ns.push_back(to_u32(part, "n"));
    }
    if (ns.empty()) throw std::invalid_argument("n: no values in '" + text + "'");
    return ns;
}

std::string fmt(double v) {
    if (std::isnan(v)) return {};
    char buf[40];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

MstInit parse_mst_init(const std::string& text) {
    if (text == "bitstring") return MstInit::RandomBitstring;
    if (text == "spanning-tree") return MstInit::SpanningTree;
    throw std::invalid_argument("mst-init: expected bitstring or spanning-tree, got '" + text + "'");
}

void write_summary_table(std::ostream& os, const std::vector<CellSummary>& rows) {
    os << "problem,n,m,algorithm,count,successes,censored,"
          "mean_success,median_success,std_success,"
          "mean_all,median_all,std_all\n";
    for (const CellSummary& s : rows) {
        os << s.problem << ',' << s.n << ',';
        if (s.m) os << *s.m;
        os << ',' << s.algorithm << ',' << s.count << ',' << s.successes << ','
           << s.censored << ',' << fmt(s.mean_success) << ','
           << fmt(s.median_success) << ',' << fmt(s.std_success) << ','
           << fmt(s.mean_all) << ',' << fmt(s.median_all) << ','
           << fmt(s.std_all) << '\n';
    }
}

std::vector<TrialRecord> load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open csv file '" + path + "'");
    return parse_csv(in);
}

// Streams rows to `path` if set, else to `fallback`. Human chatter is only
// allowed when the CSV is not going to the fallback stream.
struct CsvTarget {
    std::ofstream file;
    std::ostream* stream;
    bool to_file;

    CsvTarget(const std::string& path, std::ostream& fallback) {
        if (path.empty()) {
            stream = &fallback;
            to_file = false;
        } else {
            file.open(path, std::ios::binary);
            if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
            stream = &file;
            to_file = true;
        }
    }
};

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"search heuristics benchmark harness"};
    app.name("sdrls");
    app.require_subcommand(1);

    auto* cmd_run = app.add_subcommand("run", "execute an experiment config file");
    std::string run_config;
    cmd_run->add_option("config", run_config, "experiment config file")->required();

    auto* cmd_sweep =
        app.add_subcommand("sweep", "run a problem-size sweep over several algorithms");
    std::string sw_problem, sw_n, sw_algos, sw_out, sw_id, sw_init = "bitstring";
    unsigned sw_m = 0, sw_reps = 0, sw_workers = 1;
    uint64_t sw_budget = 0, sw_seed = 1, sw_graph_seed = 0;
    cmd_sweep->add_option("--problem", sw_problem,
                          "onemax | jump | needglobalmut | mst-tg | mst-er")->required();
    cmd_sweep->add_option("--n", sw_n, "sizes: N | N1,N2,... | start:stop:step")->required();
    cmd_sweep->add_option("--algos", sw_algos, "comma-separated algorithm tokens")->required();
    cmd_sweep->add_option("--reps", sw_reps, "repetitions per cell")->required();
    cmd_sweep->add_option("--budget", sw_budget, "evaluation budget per trial")->required();
    cmd_sweep->add_option("--m", sw_m, "jump parameter m");
    cmd_sweep->add_option("--seed", sw_seed, "base seed (default 1)");
    cmd_sweep->add_option("--graph-seed", sw_graph_seed, "graph stream seed for mst-er");
    cmd_sweep->add_option("--out", sw_out, "CSV output path (default stdout)");
    cmd_sweep->add_option("--workers", sw_workers, "threads per cell (default 1)");
    cmd_sweep->add_option("--mst-init", sw_init, "bitstring | spanning-tree");
    cmd_sweep->add_option("--id", sw_id, "experiment id (default <problem>-sweep)");

    auto* cmd_compare =
        app.add_subcommand("compare", "rank-sum test between two cells of a CSV");
    std::string cp_a, cp_b, cp_csv;
    cmd_compare->add_option("--a", cp_a, "first cell, e.g. 'sd-rls-star,n=36'")->required();
    cmd_compare->add_option("--b", cp_b, "second cell")->required();
    cmd_compare->add_option("--csv", cp_csv, "CSV file produced by run/sweep")->required();

    auto* cmd_graph = app.add_subcommand("graph", "emit a graph instance as an edge list");
    std::string gr_kind, gr_out;
    unsigned gr_n = 0;
    uint64_t gr_seed = 1;
    int64_t gr_a = 0;
    cmd_graph->add_option("--kind", gr_kind, "tg | er")->required();
    cmd_graph->add_option("--n", gr_n, "vertex count")->required();
    cmd_graph->add_option("--seed", gr_seed, "stream seed (er only, default 1)");
    cmd_graph->add_option("--a", gr_a, "triangle weight unit (tg only, default n^2)");
    cmd_graph->add_option("--out", gr_out, "output path (default stdout)");

    auto* cmd_plot = app.add_subcommand("plotdata", "per-cell mean table from a CSV");
    std::string pl_csv, pl_out;
    cmd_plot->add_option("--csv", pl_csv, "CSV file produced by run/sweep")->required();
    cmd_plot->add_option("--out", pl_out, "output path (default stdout)");

    try {
        std::reverse(args.begin(), args.end()); // CLI11 consumes a reversed vector
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*cmd_run) {
            const ExperimentConfig cfg = load_config_file(run_config);
            CsvTarget target(cfg.out_path, out);
            const auto records = run_experiment(cfg, target.stream);
            if (target.to_file) {
                out << "wrote " << records.size() << " rows to " << cfg.out_path << "\n";
                write_summary_table(out, summarize(records));
            }
        } else if (*cmd_sweep) {
            SweepPlan plan;
            plan.experiment_id = sw_id.empty() ? sw_problem + "-sweep" : sw_id;
            plan.problem = ProblemSpec{sw_problem, 0, sw_m, sw_graph_seed};
            plan.ns = parse_n_values(sw_n);
            for (const std::string& token : split_list(sw_algos, ','))
                if (!token.empty()) plan.algorithm_tokens.push_back(token);
            plan.repetitions = sw_reps;
            plan.budget = sw_budget;
            plan.base_seed = sw_seed;
            plan.mst_init = parse_mst_init(sw_init);
            plan.workers = sw_workers;
            CsvTarget target(sw_out, out);
            const auto records = run_sweep(plan, target.stream);
            if (target.to_file) {
                out << "wrote " << records.size() << " rows to " << sw_out << "\n";
                write_summary_table(out, summarize(records));
            }
        } else if (*cmd_compare) {
            const auto records = load_csv(cp_csv);
            const CellSelector sa = parse_cell_selector(cp_a);
            const CellSelector sb = parse_cell_selector(cp_b);
            const auto ea = select_evaluations(records, sa);
            const auto eb = select_evaluations(records, sb);
            if (ea.empty())
                throw std::runtime_error("cell selector matched no rows: '" + cp_a + "'");
            if (eb.empty())
                throw std::runtime_error("cell selector matched no rows: '" + cp_b + "'");
            const MannWhitneyResult r = mann_whitney_u(ea, eb);
            out << "a: " << cp_a << " count=" << ea.size() << " mean=" << fmt(mean(ea))
                << " median=" << fmt(median(ea)) << "\n";
            out << "b: " << cp_b << " count=" << eb.size() << " mean=" << fmt(mean(eb))
                << " median=" << fmt(median(eb)) << "\n";
            out << "U_a=" << fmt(r.u_a) << " p_two_sided=" << fmt(r.p_two_sided) << "\n";
        } else if (*cmd_graph) {
            WeightedGraph g = [&] {
                if (gr_kind == "tg")
                    return gr_a > 0 ? tg_graph(gr_n, gr_a) : tg_graph(gr_n);
                if (gr_kind == "er") {
                    RandomSource rng(gr_seed);
                    return erdos_renyi(gr_n, rng);
                }
                throw std::invalid_argument("kind: expected tg or er, got '" + gr_kind + "'");
            }();
            CsvTarget target(gr_out, out);
            *target.stream << to_edge_list(g);
            if (target.to_file)
                out << "wrote " << g.vertex_count() << " vertices, " << g.edge_count()
                    << " edges to " << gr_out << "\n";
        } else if (*cmd_plot) {
            const auto records = load_csv(pl_csv);
            CsvTarget target(pl_out, out);
            write_summary_table(*target.stream, summarize(records));
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace sdrls::cli
