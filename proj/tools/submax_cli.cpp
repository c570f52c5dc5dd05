// Benchmark and verification CLI for the submax library.
//
// Subcommands:
//   gen         generate a synthetic graph and write it as an edge list
//   run         execute an experiment config and write a results CSV
//   verify      run a named property suite (nonzero exit on violation)
//   ratio-table print the approximation-ratio formulas for given epsilons

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "submax/experiment.hpp"
#include "submax/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitViolation = 3;

int cmd_gen(const std::string& model, int n, double p, int m, int ring, std::uint64_t seed,
            const std::string& out) {
    std::string spec = model + ":n=" + std::to_string(n);
    if (model == "er")
        spec += ",p=" + std::to_string(p);
    else if (model == "ws")
        spec += ",ring=" + std::to_string(ring) + ",p=" + std::to_string(p);
    else if (model == "ba")
        spec += ",m=" + std::to_string(m);
    submax::CoverageGraph graph = submax::generate_graph(spec, seed);
    submax::save_edge_list(graph, out);
    std::cout << "model=" << model << " n=" << graph.n << " edges=" << graph.edge_count()
              << " seed=" << seed << " -> " << out << "\n";
    return kExitOk;
}

int cmd_run(const std::string& config_path, int threads_override,
            const std::string& out_override) {
    submax::ExperimentConfig cfg = submax::parse_experiment_config(config_path);
    if (threads_override > 0) cfg.threads = threads_override;
    if (!out_override.empty()) cfg.output = out_override;
    std::shared_ptr<const submax::Objective> objective = submax::build_objective(cfg);
    submax::ResultTable table = submax::run_experiment(cfg, objective);
    submax::write_results_csv(table, cfg.output);

    std::printf("%-22s %8s %6s %14s %12s %12s %12s %10s\n", "algorithm", "k", "runs",
                "mean_value", "std_value", "mean_norm", "mean_queries", "mean_wall");
    for (const auto& agg : table.aggregate())
        std::printf("%-22s %8d %6d %14.4f %12.4f %12.4f %12.1f %10.3f\n", agg.algorithm.c_str(),
                    agg.k, agg.runs, agg.mean_value, agg.std_value, agg.mean_norm,
                    agg.mean_queries, agg.mean_wall);
    std::cout << "wrote " << table.rows.size() << " rows to " << cfg.output << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& suite, int trials, std::uint64_t seed) {
    submax::SuiteReport report = submax::run_suite(suite, trials, seed);
    for (const auto& line : report.lines) std::cout << "  " << line << "\n";
    std::cout << "suite " << report.name << ": " << (report.passed ? "PASS" : "FAIL") << "\n";
    return report.passed ? kExitOk : kExitViolation;
}

int cmd_ratio_table(const std::vector<double>& epsilons) {
    std::printf("%10s %14s %18s %14s\n", "epsilon", "linear_seq", "low_adap_linear", "pgb");
    for (double eps : epsilons)
        std::printf("%10.4f %14.6f %18.6f %14.6f\n", eps, submax::ls_ratio_bound(eps),
                    submax::low_adap_ratio_bound(eps), 1.0 - 1.0 / std::exp(1.0) - eps);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parallel submodular maximization benchmark harness"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    int threads = 0;
    std::string out;
    app.add_option("--seed", seed, "global random seed");
    app.add_option("--threads", threads, "worker count (0 = hardware)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--out", out, "output path");

    auto* gen = app.add_subcommand("gen", "generate a synthetic graph");
    gen->fallthrough();
    std::string model;
    int n = 0, m = 5, ring = 10;
    double p = 0.1;
    gen->add_option("--model", model, "graph model")
        ->required()
        ->check(CLI::IsMember({"er", "ws", "ba"}));
    gen->add_option("--n", n, "node count")->required()->check(CLI::PositiveNumber);
    gen->add_option("--p", p, "edge/rewire probability");
    gen->add_option("--m", m, "edges per new node (ba)");
    gen->add_option("--ring", ring, "ring degree (ws)");

    auto* run = app.add_subcommand("run", "run an experiment config");
    run->fallthrough();
    std::string config_path;
    run->add_option("--config", config_path, "config file")->required();

    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->fallthrough();
    std::string suite;
    int trials = 0;
    verify->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"ratios", "thresholdseq", "submodularity", "determinism",
                               "adaptivity", "failure-rate"}));
    verify->add_option("--trials", trials, "trial/instance count override");

    auto* ratio = app.add_subcommand("ratio-table", "print ratio formulas");
    ratio->fallthrough();
    std::vector<double> epsilons;
    ratio->add_option("--eps", epsilons, "epsilon values")->required()->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (threads > 0) submax::par::set_worker_count(threads);
    try {
        if (gen->parsed()) {
            if (out.empty()) {
                std::cerr << "gen requires --out\n";
                return kExitUsage;
            }
            return cmd_gen(model, n, p, m, ring, seed, out);
        }
        if (run->parsed()) return cmd_run(config_path, threads, out);
        if (verify->parsed()) return cmd_verify(suite, trials, seed == 0 ? 1 : seed);
        if (ratio->parsed()) return cmd_ratio_table(epsilons);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const submax::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
