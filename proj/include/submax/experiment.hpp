#pragma once

#include "submax/algorithms.hpp"
#include "submax/generators.hpp"
#include "submax/io.hpp"
#include "submax/parallel.hpp"

namespace submax {

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::map<std::string, std::string> parse_spec_params(const std::string& body) {
    std::map<std::string, std::string> out;
    for (const std::string& part : split(body, ',')) {
        if (part.empty()) continue;
        auto eq = part.find('=');
        if (eq == std::string::npos) throw ParseError("bad spec parameter: " + part);
        out[trim(part.substr(0, eq))] = trim(part.substr(eq + 1));
    }
    return out;
}

}  // namespace detail

/// Generator spec grammar: "ba:n=1000,m=5", "er:n=100,p=0.01",
/// "ws:n=100,ring=10,p=0.1".
inline CoverageGraph generate_graph(const std::string& spec, std::uint64_t seed) {
    auto colon = spec.find(':');
    std::string model = colon == std::string::npos ? spec : spec.substr(0, colon);
    auto params = detail::parse_spec_params(colon == std::string::npos ? "" : spec.substr(colon + 1));
    auto need = [&](const std::string& key) {
        auto it = params.find(key);
        if (it == params.end()) throw ParseError("generator spec missing '" + key + "'");
        return it->second;
    };
    if (model == "er") return gen_er(std::stoi(need("n")), std::stod(need("p")), seed);
    if (model == "ws")
        return gen_ws(std::stoi(need("n")), std::stoi(need("ring")), std::stod(need("p")), seed);
    if (model == "ba") return gen_ba(std::stoi(need("n")), std::stoi(need("m")), seed);
    throw ParseError("unknown generator model '" + model + "'");
}

/// Builds the objective named by the config. Dataset specs:
/// generator specs as above, "edges:PATH", "matrix:PATH",
/// "features:PATH", "tweets:PATH", "weights:w0;w1;..." (modular).
inline std::shared_ptr<const Objective> build_objective(const ExperimentConfig& cfg) {
    const std::string& ds = cfg.dataset;
    auto graph = [&]() -> CoverageGraph {
        if (ds.rfind("edges:", 0) == 0) return load_edge_list(ds.substr(6));
        return generate_graph(ds, cfg.base_seed);
    };
    if (cfg.objective == "maxcover")
        return std::make_shared<MaxCoverObjective>(graph(), false);
    if (cfg.objective == "maxcover_strict")
        return std::make_shared<MaxCoverObjective>(graph(), true);
    if (cfg.objective == "influence")
        return std::make_shared<InfluenceObjective>(graph(), cfg.influence_p);
    if (cfg.objective == "revenue")
        return std::make_shared<RevenueObjective>(
            RevenueObjective::from_graph(graph(), cfg.revenue_alpha));
    if (cfg.objective == "traffic") {
        CoverageGraph g = graph();
        // Uniform unit traffic weights unless a weighted loader feeds this in.
        std::vector<double> weights(g.n, 1.0);
        return std::make_shared<TrafficObjective>(std::move(g), std::move(weights));
    }
    if (cfg.objective == "imagesumm") {
        if (ds.rfind("matrix:", 0) == 0)
            return std::make_shared<ImageSummObjective>(load_dense_matrix(ds.substr(7)));
        if (ds.rfind("features:", 0) == 0)
            return std::make_shared<ImageSummObjective>(
                load_feature_matrix_as_similarity(ds.substr(9)));
        throw ParseError("imagesumm needs dataset matrix:PATH or features:PATH");
    }
    if (cfg.objective == "tweetsumm") {
        if (ds.rfind("tweets:", 0) == 0)
            return std::make_shared<TweetSummObjective>(load_tweet_corpus(ds.substr(7)));
        throw ParseError("tweetsumm needs dataset tweets:PATH");
    }
    if (cfg.objective == "modular") {
        if (ds.rfind("weights:", 0) == 0) {
            std::vector<double> weights;
            for (const std::string& cell : detail::split(ds.substr(8), ';'))
                weights.push_back(std::stod(cell));
            return std::make_shared<ModularObjective>(std::move(weights));
        }
        throw ParseError("modular needs dataset weights:w0;w1;...");
    }
    throw ParseError("unknown objective '" + cfg.objective + "'");
}

/// Seed for one experiment cell: a pure function of the base seed and
/// the cell coordinates, so any cell can be reproduced in isolation.
inline std::uint64_t cell_seed(std::uint64_t base, const std::string& algorithm, int k, int rep,
                               int attempt) {
    return base + detail::fnv1a(algorithm + "|" + std::to_string(k) + "|" + std::to_string(rep) +
                                "|" + std::to_string(attempt));
}

inline RunRecord run_algorithm(const AlgorithmSpec& spec, const Oracle& oracle, int k,
                               std::uint64_t seed) {
    if (spec.name == "linear_seq")
        return linear_seq(oracle, k, spec.epsilon_ls, seed,
                          {spec.two_phase, spec.early_stop});
    if (spec.name == "low_adap_linear_seq")
        return low_adap_linear_seq(oracle, k, spec.epsilon_ls, seed);
    if (spec.name == "ls_pgb") return ls_pgb(oracle, k, spec.epsilon, spec.epsilon_ls, seed);
    if (spec.name == "adaptive_linear") return adaptive_linear(oracle, k);
    if (spec.name == "lazy_greedy") return lazy_greedy(oracle, k);
    throw std::invalid_argument("unknown algorithm '" + spec.name + "'");
}

/// Executes the full (algorithm × k × repetition) grid of a config.
/// Failed runs are retried with fresh seeds up to the retry limit and
/// recorded either way. value_norm divides by the lazy greedy value for
/// the same k.
inline ResultTable run_experiment(const ExperimentConfig& cfg,
                                  std::shared_ptr<const Objective> objective) {
    if (cfg.threads > 0) par::set_worker_count(cfg.threads);
    const int n = objective->ground_size();
    std::vector<int> ks = cfg.k_schedule.expand(n);
    if (ks.empty()) throw ParseError("k schedule expands to no values");
    for (int k : ks)
        if (k < 1 || k > n)
            throw ParseError("k=" + std::to_string(k) + " out of range for n=" +
                             std::to_string(n));

    std::map<int, double> normalizer;
    for (int k : ks) {
        Oracle oracle(objective);
        normalizer[k] = lazy_greedy(oracle, k).value;
    }

    ResultTable table;
    for (const AlgorithmSpec& spec : cfg.algorithms) {
        for (int k : ks) {
            for (int rep = 0; rep < cfg.repetitions; ++rep) {
                RunRecord record;
                int attempts = 0;
                std::uint64_t seed = 0;
                do {
                    seed = cell_seed(cfg.base_seed, spec.name, k, rep, attempts);
                    Oracle oracle(objective);
                    record = run_algorithm(spec, oracle, k, seed);
                    ++attempts;
                } while (record.failed && attempts <= cfg.retry_limit);

                ResultRow row;
                row.algorithm = spec.name;
                row.objective = cfg.objective;
                row.n = n;
                row.k = k;
                row.rep = rep;
                row.seed = seed;
                row.value = record.value;
                row.value_norm = normalizer[k] > 0.0 ? record.value / normalizer[k] : 0.0;
                row.queries = record.queries;
                row.rounds = record.rounds;
                row.wall_seconds = record.wall_seconds;
                row.failed = record.failed;
                row.attempts = attempts;
                table.rows.push_back(std::move(row));
            }
        }
    }
    std::sort(table.rows.begin(), table.rows.end(), [](const ResultRow& a, const ResultRow& b) {
        if (a.algorithm != b.algorithm) return a.algorithm < b.algorithm;
        if (a.k != b.k) return a.k < b.k;
        return a.rep < b.rep;
    });
    return table;
}

}  // namespace submax
