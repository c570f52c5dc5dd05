#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "submax/objectives.hpp"

namespace submax {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return in;
}

}  // namespace detail

/// Edge list: "u v" per line, '#' comments, optional "# n=<N>" header.
/// Duplicate and reversed edges are deduplicated; self-loops are errors.
inline CoverageGraph load_edge_list(const std::string& path) {
    std::ifstream in = detail::open_or_throw(path);
    std::vector<std::pair<ElementId, ElementId>> edges;
    int n_override = -1;
    ElementId max_id = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = detail::trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            auto pos = t.find("n=");
            if (pos != std::string::npos) {
                try {
                    n_override = std::stoi(t.substr(pos + 2));
                } catch (const std::exception&) {
                    // not an n= header, just a comment
                }
            }
            continue;
        }
        std::istringstream ls(t);
        long u, v;
        if (!(ls >> u >> v))
            throw ParseError(path + ":" + std::to_string(line_no) + ": malformed edge line");
        std::string rest;
        if (ls >> rest)
            throw ParseError(path + ":" + std::to_string(line_no) + ": trailing token");
        if (u < 0 || v < 0)
            throw ParseError(path + ":" + std::to_string(line_no) + ": negative id");
        if (u == v) throw ParseError(path + ":" + std::to_string(line_no) + ": self-loop");
        edges.emplace_back(static_cast<ElementId>(u), static_cast<ElementId>(v));
        max_id = std::max({max_id, static_cast<ElementId>(u), static_cast<ElementId>(v)});
    }
    int n = n_override >= 0 ? n_override : max_id + 1;
    return CoverageGraph::from_edges(n, std::move(edges));
}

inline void save_edge_list(const CoverageGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << "# n=" << g.n << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    if (!out) throw ParseError("write failed: " + path);
}

/// Comma-separated numeric rows; must be square in matrix mode.
inline SimilarityMatrix load_dense_matrix(const std::string& path) {
    std::ifstream in = detail::open_or_throw(path);
    std::vector<std::vector<double>> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<double> row;
        for (const std::string& cell : detail::split(t, ',')) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(cell, &used));
                if (used != cell.size()) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                throw ParseError(path + ":" + std::to_string(line_no) + ": non-numeric cell '" +
                                 cell + "'");
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError(path + ":" + std::to_string(line_no) + ": ragged row");
        rows.push_back(std::move(row));
    }
    if (!rows.empty() && rows.size() != rows.front().size())
        throw ParseError(path + ": matrix is not square");
    SimilarityMatrix sim;
    sim.n = static_cast<int>(rows.size());
    sim.data.reserve(static_cast<std::size_t>(sim.n) * sim.n);
    for (const auto& row : rows) sim.data.insert(sim.data.end(), row.begin(), row.end());
    return sim;
}

/// Reads an n×d feature matrix (CSV rows, any width) and returns the
/// n×n cosine-similarity matrix.
inline SimilarityMatrix load_feature_matrix_as_similarity(const std::string& path) {
    std::ifstream in = detail::open_or_throw(path);
    std::vector<double> features;
    std::size_t width = 0;
    std::string line;
    int line_no = 0, n = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto cells = detail::split(t, ',');
        if (width == 0) width = cells.size();
        if (cells.size() != width)
            throw ParseError(path + ":" + std::to_string(line_no) + ": ragged row");
        for (const std::string& cell : cells) {
            try {
                features.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw ParseError(path + ":" + std::to_string(line_no) + ": non-numeric cell '" +
                                 cell + "'");
            }
        }
        ++n;
    }
    return cosine_similarity(n, static_cast<int>(width), features);
}

/// Tab-separated "retweets<TAB>kw1,kw2,..." lines. The vocabulary is
/// built in first-appearance order; duplicate keywords within a tweet
/// collapse to one.
inline KeywordCorpus load_tweet_corpus(const std::string& path) {
    std::ifstream in = detail::open_or_throw(path);
    KeywordCorpus corpus;
    std::map<std::string, int> vocab;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto tab = t.find('\t');
        if (tab == std::string::npos)
            throw ParseError(path + ":" + std::to_string(line_no) + ": missing tab separator");
        long long retweets;
        try {
            retweets = std::stoll(detail::trim(t.substr(0, tab)));
        } catch (const std::exception&) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": bad retweet count");
        }
        if (retweets < 0)
            throw ParseError(path + ":" + std::to_string(line_no) + ": negative retweet count");
        KeywordCorpus::Tweet tweet;
        tweet.retweets = static_cast<std::uint64_t>(retweets);
        for (const std::string& kw : detail::split(t.substr(tab + 1), ',')) {
            if (kw.empty()) continue;
            auto [it, inserted] = vocab.try_emplace(kw, static_cast<int>(vocab.size()));
            tweet.keywords.push_back(it->second);
        }
        if (tweet.keywords.empty())
            throw ParseError(path + ":" + std::to_string(line_no) + ": empty keyword list");
        std::sort(tweet.keywords.begin(), tweet.keywords.end());
        tweet.keywords.erase(std::unique(tweet.keywords.begin(), tweet.keywords.end()),
                             tweet.keywords.end());
        corpus.tweets.push_back(std::move(tweet));
    }
    corpus.vocabulary_size = static_cast<int>(vocab.size());
    return corpus;
}

// ---------------------------------------------------------------------------
// Experiment configuration
// ---------------------------------------------------------------------------

struct AlgorithmSpec {
    std::string name;
    double epsilon = 0.1;
    double epsilon_ls = 0.21;
    bool two_phase = false;
    bool early_stop = false;
};

struct KSchedule {
    std::vector<int> explicit_values;  // used when not geometric
    bool geometric = false;
    std::string start_expr, end_expr;  // may reference n, e.g. "n/1000"
    int factor = 2;

    std::vector<int> expand(int n) const;
};

struct ExperimentConfig {
    std::string objective = "maxcover";
    double influence_p = 0.01;
    double revenue_alpha = 0.9;
    std::string dataset;  // generator spec or file reference
    std::vector<AlgorithmSpec> algorithms;
    KSchedule k_schedule;
    int repetitions = 5;
    std::uint64_t base_seed = 0;
    int threads = 0;  // 0 = hardware
    std::string output = "results.csv";
    int retry_limit = 3;
};

inline const std::vector<std::string>& registered_algorithms() {
    static const std::vector<std::string> names = {
        "linear_seq", "low_adap_linear_seq", "ls_pgb", "adaptive_linear", "lazy_greedy"};
    return names;
}

namespace detail {

inline std::optional<int> eval_k_expr(const std::string& expr, int n) {
    std::string t = trim(expr);
    try {
        if (t == "n") return n;
        if (t.rfind("n/", 0) == 0) {
            int d = std::stoi(t.substr(2));
            return d > 0 ? std::optional<int>(n / d) : std::nullopt;
        }
        std::size_t used = 0;
        int v = std::stoi(t, &used);
        if (used != t.size()) return std::nullopt;
        return v;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace detail

inline std::vector<int> KSchedule::expand(int n) const {
    if (!geometric) return explicit_values;
    auto start = detail::eval_k_expr(start_expr, n);
    auto end = detail::eval_k_expr(end_expr, n);
    if (!start || !end) throw ParseError("bad geometric k bounds");
    std::vector<int> ks;
    for (long long k = std::max(1, *start); k <= *end; k *= factor) ks.push_back(static_cast<int>(k));
    return ks;
}

/// Key-value config with [algorithm] sections. Collects every problem
/// before failing so a bad config reports all of its errors at once.
inline ExperimentConfig parse_experiment_config(const std::string& path) {
    std::ifstream in = detail::open_or_throw(path);
    ExperimentConfig cfg;
    std::vector<std::string> problems;
    std::map<std::string, std::map<std::string, std::string>> sections;
    std::string section;  // "" = top level
    std::string line;
    int line_no = 0;
    bool saw_k = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = detail::trim(line);
        auto hash = t.find('#');
        if (hash != std::string::npos) t = detail::trim(t.substr(0, hash));
        if (t.empty()) continue;
        if (t.front() == '[' && t.back() == ']') {
            section = detail::trim(t.substr(1, t.size() - 2));
            continue;
        }
        auto eq = t.find('=');
        if (eq == std::string::npos) {
            problems.push_back("line " + std::to_string(line_no) + ": expected key = value");
            continue;
        }
        sections[section][detail::trim(t.substr(0, eq))] = detail::trim(t.substr(eq + 1));
    }

    auto& top = sections[""];
    auto take = [&](const std::string& key) -> std::optional<std::string> {
        auto it = top.find(key);
        if (it == top.end()) return std::nullopt;
        return it->second;
    };
    auto parse_int = [&](const std::string& key, int& out, int min_value) {
        if (auto v = take(key)) {
            try {
                out = std::stoi(*v);
            } catch (const std::exception&) {
                problems.push_back(key + ": not an integer: " + *v);
                return;
            }
            if (out < min_value)
                problems.push_back(key + ": must be >= " + std::to_string(min_value));
        }
    };

    if (auto v = take("objective")) cfg.objective = *v;
    static const std::vector<std::string> known_objectives = {
        "maxcover", "maxcover_strict", "imagesumm", "tweetsumm",
        "influence", "revenue", "traffic", "modular"};
    if (std::find(known_objectives.begin(), known_objectives.end(), cfg.objective) ==
        known_objectives.end())
        problems.push_back("objective: unknown kind '" + cfg.objective + "'");

    if (auto v = take("dataset"))
        cfg.dataset = *v;
    else
        problems.push_back("dataset: required");

    if (auto v = take("p")) cfg.influence_p = std::stod(*v);
    if (auto v = take("alpha")) cfg.revenue_alpha = std::stod(*v);

    if (auto v = take("k")) {
        saw_k = true;
        if (v->rfind("geometric:", 0) == 0) {
            std::string body = v->substr(10);
            auto dots = body.find("..");
            auto x = body.find(":x");
            if (dots == std::string::npos || x == std::string::npos || x < dots) {
                problems.push_back("k: bad geometric syntax, want geometric:START..END:xFACTOR");
            } else {
                cfg.k_schedule.geometric = true;
                cfg.k_schedule.start_expr = body.substr(0, dots);
                cfg.k_schedule.end_expr = body.substr(dots + 2, x - dots - 2);
                try {
                    cfg.k_schedule.factor = std::stoi(body.substr(x + 2));
                } catch (const std::exception&) {
                    problems.push_back("k: bad geometric factor");
                }
                if (cfg.k_schedule.factor < 2) problems.push_back("k: factor must be >= 2");
            }
        } else {
            for (const std::string& cell : detail::split(*v, ',')) {
                try {
                    int k = std::stoi(cell);
                    if (k < 1)
                        problems.push_back("k: values must be >= 1");
                    else
                        cfg.k_schedule.explicit_values.push_back(k);
                } catch (const std::exception&) {
                    problems.push_back("k: not an integer: " + cell);
                }
            }
        }
    }
    if (!saw_k) problems.push_back("k: required");

    if (auto v = take("algorithms")) {
        for (const std::string& name : detail::split(*v, ',')) {
            if (name.empty()) continue;
            const auto& known = registered_algorithms();
            if (std::find(known.begin(), known.end(), name) == known.end()) {
                problems.push_back("algorithms: unknown algorithm '" + name + "'");
                continue;
            }
            AlgorithmSpec spec;
            spec.name = name;
            auto sec = sections.find(name);
            if (sec != sections.end()) {
                for (const auto& [key, val] : sec->second) {
                    try {
                        if (key == "epsilon")
                            spec.epsilon = std::stod(val);
                        else if (key == "epsilon_ls")
                            spec.epsilon_ls = std::stod(val);
                        else if (key == "two_phase")
                            spec.two_phase = (val == "true" || val == "1");
                        else if (key == "early_stop")
                            spec.early_stop = (val == "true" || val == "1");
                        else
                            problems.push_back("[" + name + "] unknown key '" + key + "'");
                    } catch (const std::exception&) {
                        problems.push_back("[" + name + "] bad value for '" + key + "'");
                    }
                }
            }
            cfg.algorithms.push_back(std::move(spec));
        }
    }
    if (cfg.algorithms.empty()) problems.push_back("algorithms: at least one required");

    parse_int("repetitions", cfg.repetitions, 1);
    parse_int("retry_limit", cfg.retry_limit, 0);
    parse_int("threads", cfg.threads, 0);
    if (auto v = take("seed")) {
        try {
            cfg.base_seed = std::stoull(*v);
        } catch (const std::exception&) {
            problems.push_back("seed: not an integer: " + *v);
        }
    }
    if (auto v = take("output")) cfg.output = *v;

    static const std::vector<std::string> known_top = {
        "objective", "dataset", "p", "alpha", "k", "algorithms",
        "repetitions", "retry_limit", "threads", "seed", "output"};
    for (const auto& [key, _] : top)
        if (std::find(known_top.begin(), known_top.end(), key) == known_top.end())
            problems.push_back("unknown key '" + key + "'");

    if (!problems.empty()) {
        std::string msg = "invalid config " + path + ":";
        for (const auto& p : problems) msg += "\n  - " + p;
        throw ParseError(msg);
    }
    return cfg;
}

// ---------------------------------------------------------------------------
// Result table
// ---------------------------------------------------------------------------

struct ResultRow {
    std::string algorithm;
    std::string objective;
    int n = 0;
    int k = 0;
    int rep = 0;
    std::uint64_t seed = 0;
    double value = 0.0;
    double value_norm = 0.0;
    std::uint64_t queries = 0;
    std::uint64_t rounds = 0;
    double wall_seconds = 0.0;
    bool failed = false;
    int attempts = 1;
};

struct Aggregate {
    std::string algorithm;
    int k = 0;
    double mean_value = 0.0;
    double std_value = 0.0;
    double mean_norm = 0.0;
    double mean_queries = 0.0;
    double mean_rounds = 0.0;
    double mean_wall = 0.0;
    int runs = 0;
};

struct ResultTable {
    std::vector<ResultRow> rows;

    std::vector<Aggregate> aggregate() const {
        std::map<std::pair<std::string, int>, std::vector<const ResultRow*>> groups;
        for (const auto& row : rows) groups[{row.algorithm, row.k}].push_back(&row);
        std::vector<Aggregate> out;
        for (const auto& [key, members] : groups) {
            Aggregate agg;
            agg.algorithm = key.first;
            agg.k = key.second;
            agg.runs = static_cast<int>(members.size());
            for (const auto* r : members) {
                agg.mean_value += r->value;
                agg.mean_norm += r->value_norm;
                agg.mean_queries += static_cast<double>(r->queries);
                agg.mean_rounds += static_cast<double>(r->rounds);
                agg.mean_wall += r->wall_seconds;
            }
            agg.mean_value /= agg.runs;
            agg.mean_norm /= agg.runs;
            agg.mean_queries /= agg.runs;
            agg.mean_rounds /= agg.runs;
            agg.mean_wall /= agg.runs;
            double var = 0.0;
            for (const auto* r : members) {
                double d = r->value - agg.mean_value;
                var += d * d;
            }
            agg.std_value = agg.runs > 1 ? std::sqrt(var / (agg.runs - 1)) : 0.0;
            out.push_back(agg);
        }
        return out;
    }
};

inline void write_results_csv(const ResultTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << "algorithm,objective,n,k,rep,seed,value,value_norm,queries,rounds,"
           "wall_seconds,failed,attempts\n";
    for (const auto& r : table.rows) {
        out << r.algorithm << ',' << r.objective << ',' << r.n << ',' << r.k << ',' << r.rep
            << ',' << r.seed << ',' << detail::format_double(r.value) << ','
            << detail::format_double(r.value_norm) << ',' << r.queries << ',' << r.rounds << ','
            << detail::format_double(r.wall_seconds) << ',' << (r.failed ? 1 : 0) << ','
            << r.attempts << '\n';
    }
    if (!out) throw ParseError("write failed: " + path);
}

}  // namespace submax
