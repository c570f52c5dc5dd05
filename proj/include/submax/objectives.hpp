#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <utility>

#include "submax/oracle.hpp"

namespace submax {

/// Undirected graph with sorted per-node neighbor lists, no self-loops.
struct CoverageGraph {
    int n = 0;
    std::vector<std::vector<ElementId>> adjacency;

    static CoverageGraph from_edges(int n, std::vector<std::pair<ElementId, ElementId>> edges) {
        CoverageGraph g;
        g.n = n;
        g.adjacency.assign(n, {});
        for (auto [u, v] : edges) {
            if (u == v) throw std::invalid_argument("self-loop");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge endpoint out of range");
            g.adjacency[u].push_back(v);
            g.adjacency[v].push_back(u);
        }
        for (auto& nbrs : g.adjacency) {
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        }
        return g;
    }

    std::size_t edge_count() const {
        std::size_t deg_sum = 0;
        for (const auto& nbrs : adjacency) deg_sum += nbrs.size();
        return deg_sum / 2;
    }

    std::vector<std::pair<ElementId, ElementId>> edges() const {
        std::vector<std::pair<ElementId, ElementId>> out;
        for (ElementId u = 0; u < n; ++u)
            for (ElementId v : adjacency[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }
};

namespace detail {

inline std::vector<ElementId> as_unique_sorted(std::span<const ElementId> s) {
    std::vector<ElementId> out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

/// Number of nodes covered by S. Default semantics are the closed
/// neighborhood |S ∪ N(S)|; the strict variant counts only nodes with
/// at least one neighbor in S, which excludes isolated members of S.
class MaxCoverObjective final : public Objective {
public:
    explicit MaxCoverObjective(CoverageGraph graph, bool strict = false)
        : graph_(std::move(graph)), strict_(strict) {}

    int ground_size() const override { return graph_.n; }

    double value(std::span<const ElementId> s) const override {
        std::vector<char> covered(graph_.n, 0);
        std::size_t count = 0;
        for (ElementId x : s) {
            if (!strict_ && !covered[x]) {
                covered[x] = 1;
                ++count;
            }
            for (ElementId y : graph_.adjacency[x]) {
                if (!covered[y]) {
                    covered[y] = 1;
                    ++count;
                }
            }
        }
        return static_cast<double>(count);
    }

    std::unique_ptr<Evaluator> make_evaluator() const override;

    const CoverageGraph& graph() const { return graph_; }
    bool strict() const { return strict_; }

private:
    CoverageGraph graph_;
    bool strict_;
    friend class CoverageEvaluator;
};

/// Incremental coverage counter with an undo log. Counts are integers,
/// so values agree exactly with the naive formula.
class CoverageEvaluator final : public Evaluator {
public:
    explicit CoverageEvaluator(const MaxCoverObjective& obj)
        : obj_(obj), covered_(obj.graph_.n, 0) {}

    void push(ElementId x) override {
        frames_.push_back({marks_.size(), count_});
        if (!obj_.strict_) mark(x);
        for (ElementId y : obj_.graph_.adjacency[x]) mark(y);
    }

    void pop_to(std::size_t size) override {
        while (frames_.size() > size) {
            const Frame& f = frames_.back();
            while (marks_.size() > f.mark_watermark) {
                covered_[marks_.back()] = 0;
                marks_.pop_back();
            }
            count_ = f.count_before;
            frames_.pop_back();
        }
    }

    std::size_t size() const override { return frames_.size(); }
    double current_value() override { return static_cast<double>(count_); }

private:
    struct Frame {
        std::size_t mark_watermark;
        std::size_t count_before;
    };

    void mark(ElementId y) {
        if (!covered_[y]) {
            covered_[y] = 1;
            marks_.push_back(y);
            ++count_;
        }
    }

    const MaxCoverObjective& obj_;
    std::vector<char> covered_;
    std::vector<ElementId> marks_;
    std::vector<Frame> frames_;
    std::size_t count_ = 0;
};

inline std::unique_ptr<Evaluator> MaxCoverObjective::make_evaluator() const {
    return std::make_unique<CoverageEvaluator>(*this);
}

/// Row-major pairwise similarity matrix with unit diagonal.
struct SimilarityMatrix {
    int n = 0;
    std::vector<double> data;  // n*n, data[i*n+j] = s_{i,j}

    double at(int i, int j) const { return data[static_cast<std::size_t>(i) * n + j]; }
};

/// f(S) = Σ_i max_{j∈S} s_{i,j}; 0 on the empty set.
class ImageSummObjective final : public Objective {
public:
    explicit ImageSummObjective(SimilarityMatrix sim) : sim_(std::move(sim)) {}

    int ground_size() const override { return sim_.n; }

    double value(std::span<const ElementId> s) const override {
        if (s.empty()) return 0.0;
        double total = 0.0;
        for (int i = 0; i < sim_.n; ++i) {
            double best = 0.0;
            for (ElementId j : s) best = std::max(best, sim_.at(i, j));
            total += best;
        }
        return total;
    }

private:
    SimilarityMatrix sim_;
};

/// Tweets with retweet counts and keyword sets over a shared vocabulary.
struct KeywordCorpus {
    struct Tweet {
        std::uint64_t retweets = 0;
        std::vector<int> keywords;  // sorted unique keyword ids < vocabulary_size
    };
    std::vector<Tweet> tweets;
    int vocabulary_size = 0;
};

/// f(S) = Σ_w sqrt(Σ_{s∈S, w∈W_s} retweets(s)).
class TweetSummObjective final : public Objective {
public:
    explicit TweetSummObjective(KeywordCorpus corpus) : corpus_(std::move(corpus)) {}

    int ground_size() const override { return static_cast<int>(corpus_.tweets.size()); }

    double value(std::span<const ElementId> s) const override {
        std::vector<std::uint64_t> totals(corpus_.vocabulary_size, 0);
        for (ElementId id : detail::as_unique_sorted(s)) {
            const auto& tweet = corpus_.tweets[id];
            for (int w : tweet.keywords) totals[w] += tweet.retweets;
        }
        double sum = 0.0;
        for (std::uint64_t t : totals)
            if (t > 0) sum += std::sqrt(static_cast<double>(t));
        return sum;
    }

private:
    KeywordCorpus corpus_;
};

/// Expected number of activated nodes: f_i(S) = 1 for i ∈ S, else
/// 1 - (1-p)^{|N(i) ∩ S|}.
class InfluenceObjective final : public Objective {
public:
    InfluenceObjective(CoverageGraph graph, double p) : graph_(std::move(graph)), p_(p) {
        if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must be in (0,1)");
    }

    int ground_size() const override { return graph_.n; }

    double value(std::span<const ElementId> s) const override {
        std::vector<int> hits(graph_.n, 0);
        std::vector<char> selected(graph_.n, 0);
        for (ElementId x : s) {
            if (selected[x]) continue;
            selected[x] = 1;
            for (ElementId y : graph_.adjacency[x]) ++hits[y];
        }
        double total = 0.0;
        for (int i = 0; i < graph_.n; ++i) {
            if (selected[i])
                total += 1.0;
            else if (hits[i] > 0)
                total += 1.0 - std::pow(1.0 - p_, hits[i]);
        }
        return total;
    }

    double activation_probability() const { return p_; }

private:
    CoverageGraph graph_;
    double p_;
};

/// f(S) = Σ_{i∈X} (Σ_{j∈S} w_{i,j})^α with 0 < α < 1. The ground set
/// is the influencer candidates; weights are stored sparsely as
/// per-candidate (user, weight) lists.
class RevenueObjective final : public Objective {
public:
    RevenueObjective(int users, std::vector<std::vector<std::pair<int, double>>> influence,
                     double alpha = 0.9)
        : users_(users), influence_(std::move(influence)), alpha_(alpha) {
        if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0,1)");
        for (const auto& column : influence_)
            for (auto [i, w] : column) {
                if (i < 0 || i >= users) throw std::invalid_argument("user id out of range");
                if (!(w >= 0.0) || !std::isfinite(w))
                    throw std::invalid_argument("weights must be finite and >= 0");
            }
    }

    static RevenueObjective from_dense(int users, int candidates, std::span<const double> weights,
                                       double alpha = 0.9) {
        if (weights.size() != static_cast<std::size_t>(users) * candidates)
            throw std::invalid_argument("weight matrix shape mismatch");
        std::vector<std::vector<std::pair<int, double>>> influence(candidates);
        for (int i = 0; i < users; ++i)
            for (int j = 0; j < candidates; ++j) {
                double w = weights[static_cast<std::size_t>(i) * candidates + j];
                if (w != 0.0) influence[j].emplace_back(i, w);
            }
        return RevenueObjective(users, std::move(influence), alpha);
    }

    /// Unit-weight instance on a graph: users and candidates are the
    /// nodes, w_{i,j} = 1 iff {i,j} is an edge.
    static RevenueObjective from_graph(const CoverageGraph& graph, double alpha = 0.9) {
        std::vector<std::vector<std::pair<int, double>>> influence(graph.n);
        for (ElementId j = 0; j < graph.n; ++j)
            for (ElementId i : graph.adjacency[j]) influence[j].emplace_back(i, 1.0);
        return RevenueObjective(graph.n, std::move(influence), alpha);
    }

    int ground_size() const override { return static_cast<int>(influence_.size()); }

    double value(std::span<const ElementId> s) const override {
        std::vector<double> load(users_, 0.0);
        for (ElementId j : detail::as_unique_sorted(s))
            for (auto [i, w] : influence_[j]) load[i] += w;
        double total = 0.0;
        for (double l : load)
            if (l > 0.0) total += std::pow(l, alpha_);
        return total;
    }

    double alpha() const { return alpha_; }

private:
    int users_;
    std::vector<std::vector<std::pair<int, double>>> influence_;
    double alpha_;
};

/// Traffic observed by sensors at S, modeled as node-weighted closed
/// neighborhood coverage; uniform weight 1 reduces to MaxCover.
class TrafficObjective final : public Objective {
public:
    TrafficObjective(CoverageGraph graph, std::vector<double> node_weights)
        : graph_(std::move(graph)), weights_(std::move(node_weights)) {
        if (weights_.size() != static_cast<std::size_t>(graph_.n))
            throw std::invalid_argument("one weight per node required");
        for (double w : weights_)
            if (!(w >= 0.0) || !std::isfinite(w))
                throw std::invalid_argument("weights must be finite and >= 0");
    }

    int ground_size() const override { return graph_.n; }

    double value(std::span<const ElementId> s) const override {
        std::vector<char> covered(graph_.n, 0);
        for (ElementId x : s) {
            covered[x] = 1;
            for (ElementId y : graph_.adjacency[x]) covered[y] = 1;
        }
        double total = 0.0;
        for (int i = 0; i < graph_.n; ++i)
            if (covered[i]) total += weights_[i];
        return total;
    }

private:
    CoverageGraph graph_;
    std::vector<double> weights_;
};

/// Additive objective, mostly useful as a test instance with a known
/// optimum (top-k weights).
class ModularObjective final : public Objective {
public:
    explicit ModularObjective(std::vector<double> weights) : weights_(std::move(weights)) {}

    int ground_size() const override { return static_cast<int>(weights_.size()); }

    double value(std::span<const ElementId> s) const override {
        double total = 0.0;
        for (ElementId x : detail::as_unique_sorted(s)) total += weights_[x];
        return total;
    }

private:
    std::vector<double> weights_;
};

/// Cosine-similarity matrix from an n×d dense feature matrix; all-zero
/// rows get similarity 0 to everything but themselves.
inline SimilarityMatrix cosine_similarity(int n, int d, std::span<const double> features) {
    if (features.size() != static_cast<std::size_t>(n) * d)
        throw std::invalid_argument("feature matrix shape mismatch");
    std::vector<double> norms(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double sq = 0.0;
        for (int j = 0; j < d; ++j) {
            double v = features[static_cast<std::size_t>(i) * d + j];
            sq += v * v;
        }
        norms[i] = std::sqrt(sq);
    }
    SimilarityMatrix sim;
    sim.n = n;
    sim.data.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        sim.data[static_cast<std::size_t>(i) * n + i] = 1.0;
        for (int j = i + 1; j < n; ++j) {
            double dot = 0.0;
            for (int t = 0; t < d; ++t)
                dot += features[static_cast<std::size_t>(i) * d + t] *
                       features[static_cast<std::size_t>(j) * d + t];
            double denom = norms[i] * norms[j];
            double s = denom > 0.0 ? dot / denom : 0.0;
            sim.data[static_cast<std::size_t>(i) * n + j] = s;
            sim.data[static_cast<std::size_t>(j) * n + i] = s;
        }
    }
    return sim;
}

}  // namespace submax
