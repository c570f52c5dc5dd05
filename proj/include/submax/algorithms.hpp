#pragma once

#include <chrono>
#include <cmath>
#include <limits>
#include <queue>
#include <random>
#include <string>

#include "submax/oracle.hpp"

namespace submax {

/// Guaranteed fraction of OPT for a successful LinearSeq run:
/// 1 / (4 + 4(2-ε)ε / ((1-ε)(1-2ε))).
inline double ls_ratio_bound(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 0.5))
        throw std::invalid_argument("epsilon must be in (0, 1/2)");
    double term = 4.0 * (2.0 - epsilon) * epsilon / ((1.0 - epsilon) * (1.0 - 2.0 * epsilon));
    return 1.0 / (4.0 + term);
}

/// Same shape with leading constant 5, for the low-adaptivity variant.
inline double low_adap_ratio_bound(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 0.5))
        throw std::invalid_argument("epsilon must be in (0, 1/2)");
    double term = 4.0 * (2.0 - epsilon) * epsilon / ((1.0 - epsilon) * (1.0 - 2.0 * epsilon));
    return 1.0 / (5.0 + term);
}

inline double linear_seq_beta(double epsilon) {
    return epsilon / (16.0 * std::log(8.0 / (1.0 - std::exp(-epsilon / 2.0))));
}

/// Iteration budget ⌈4(1 + 1/(βε)) log n⌉.
inline std::uint64_t linear_seq_iteration_budget(double epsilon, int n) {
    double beta = linear_seq_beta(epsilon);
    return static_cast<std::uint64_t>(
        std::ceil(4.0 * (1.0 + 1.0 / (beta * epsilon)) * std::log(static_cast<double>(n))));
}

/// Iteration budget ⌈4(1 + 1/(βε)) log(n/k)⌉ for the low-adaptivity variant.
inline std::uint64_t low_adap_iteration_budget(double epsilon, int n, int k) {
    double beta = linear_seq_beta(epsilon);
    return static_cast<std::uint64_t>(std::ceil(
        4.0 * (1.0 + 1.0 / (beta * epsilon)) * std::log(static_cast<double>(n) / k)));
}

/// Iteration budget ⌈4(1 + 2/ε) log(n/δ)⌉ for ThresholdSeq.
inline std::uint64_t threshold_seq_iteration_budget(double epsilon, int n, double delta) {
    return static_cast<std::uint64_t>(std::ceil(
        4.0 * (1.0 + 2.0 / epsilon) * std::log(static_cast<double>(n) / delta)));
}

/// Ceiling of the number of ThresholdSeq calls ParallelGreedyBoost makes.
inline std::uint64_t pgb_call_budget(double epsilon, double alpha) {
    return static_cast<std::uint64_t>(
        std::ceil(std::log(alpha / 3.0) / std::log(1.0 - epsilon)));
}

inline double pgb_delta(double epsilon, double alpha) {
    return 1.0 / (std::log(alpha / 3.0) / std::log(1.0 - epsilon) + 1.0);
}

/// One algorithm execution's outcome and its share of the ledger.
struct RunRecord {
    std::string algorithm;
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    std::vector<ElementId> solution;
    double value = 0.0;
    std::uint64_t queries = 0;
    std::uint64_t rounds = 0;
    double wall_seconds = 0.0;
    bool failed = false;
};

// ---------------------------------------------------------------------------
// Block index families and prefix selection rules
// ---------------------------------------------------------------------------

/// Λ for LinearSeq: geometric indices up to k, arithmetic stride εk up
/// to |V|, plus |V| itself. Ascending, deduplicated, all in [1, |V|].
inline std::vector<std::size_t> linear_seq_lambdas(double epsilon, int k, std::size_t v_size) {
    std::vector<std::size_t> lambdas;
    if (v_size == 0) return lambdas;
    double geo = 1.0;
    while (true) {
        auto lam = static_cast<std::size_t>(std::floor(geo));
        if (lam > static_cast<std::size_t>(k) || lam > v_size) break;
        lambdas.push_back(lam);
        geo *= 1.0 + epsilon;
    }
    for (std::uint64_t u = 0;; ++u) {
        auto lam = static_cast<std::size_t>(std::floor(k + u * epsilon * k));
        if (lam > v_size) break;
        if (lam >= 1) lambdas.push_back(lam);
    }
    lambdas.push_back(v_size);
    std::sort(lambdas.begin(), lambdas.end());
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
    return lambdas;
}

/// Λ for ThresholdSeq: geometric indices up to s, plus s itself.
inline std::vector<std::size_t> threshold_seq_lambdas(double epsilon, std::size_t s) {
    std::vector<std::size_t> lambdas;
    if (s == 0) return lambdas;
    double geo = 1.0;
    while (true) {
        auto lam = static_cast<std::size_t>(std::floor(geo));
        if (lam > s) break;
        lambdas.push_back(lam);
        geo *= 1.0 + epsilon;
    }
    lambdas.push_back(s);
    std::sort(lambdas.begin(), lambdas.end());
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
    return lambdas;
}

/// LinearSeq prefix rule: the largest failing block λ_i such that either
/// λ_i ≤ k and every earlier block passed, or λ_i > k and the maximal
/// run of passing blocks ending just before i spans at least k elements.
/// Returns the chosen index into lambdas; lambdas.size()-1 when every
/// block passed (commit the whole permuted remainder); -1 when no index
/// qualifies (commit nothing this iteration).
inline std::ptrdiff_t select_linear_seq_prefix(std::span<const std::size_t> lambdas,
                                               std::span<const char> passed, int k) {
    const std::size_t m = lambdas.size();
    if (std::all_of(passed.begin(), passed.end(), [](char c) { return c != 0; }))
        return static_cast<std::ptrdiff_t>(m) - 1;
    // run_start[i] = first index of the maximal passing run ending at i.
    std::vector<std::size_t> run_start(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        run_start[i] = (passed[i] && i > 0 && passed[i - 1]) ? run_start[i - 1] : i;
    auto lambda_before = [&](std::size_t i) -> std::size_t {
        return i == 0 ? 0 : lambdas[i - 1];
    };
    for (std::size_t r = m; r-- > 0;) {
        if (passed[r]) continue;
        if (lambdas[r] <= static_cast<std::size_t>(k)) {
            if (r == 0 || (passed[r - 1] && run_start[r - 1] == 0))
                return static_cast<std::ptrdiff_t>(r);
        } else if (r > 0 && passed[r - 1]) {
            std::size_t m0 = run_start[r - 1];
            if (lambdas[r - 1] - lambda_before(m0) >= static_cast<std::size_t>(k))
                return static_cast<std::ptrdiff_t>(r);
        }
    }
    return -1;
}

/// ThresholdSeq prefix rule: the smallest λ exceeding every passing
/// block, or the last block when all of them passed.
inline std::size_t select_threshold_prefix(std::span<const std::size_t> lambdas,
                                           std::span<const char> passed) {
    std::ptrdiff_t last_pass = -1;
    for (std::size_t i = 0; i < passed.size(); ++i)
        if (passed[i]) last_pass = static_cast<std::ptrdiff_t>(i);
    if (last_pass < 0) return 0;  // cannot happen for surviving elements
    if (last_pass + 1 >= static_cast<std::ptrdiff_t>(lambdas.size()))
        return static_cast<std::size_t>(last_pass);
    return static_cast<std::size_t>(last_pass + 1);
}

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + salt * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline RunRecord finish_record(RunRecord record, const Oracle& oracle,
                               const QueryLedger::Snapshot& start, const Stopwatch& timer,
                               std::vector<ElementId> solution, bool failed) {
    record.solution = std::move(solution);
    record.failed = failed;
    record.value = failed && record.solution.empty() ? 0.0 : oracle.raw_value(record.solution);
    auto delta = oracle.ledger().since(start);
    record.queries = delta.queries;
    record.rounds = delta.rounds;
    record.wall_seconds = timer.seconds();
    return record;
}

struct LinearSeqLoopResult {
    std::vector<ElementId> remaining;  // V after the last filter
    bool stopped_early = false;
};

/// The shared outer loop of LinearSeq and its variants: filter, permute,
/// block-evaluate, commit a prefix. Mutates A and f(A) in place and
/// returns the surviving pool.
template <class BreakPredicate>
LinearSeqLoopResult linear_seq_loop(const Oracle& oracle, SolutionSet& a, double& f_a, int k,
                                    double epsilon, std::uint64_t budget,
                                    std::vector<ElementId> pool, std::mt19937_64& rng,
                                    BreakPredicate&& done_early,
                                    double early_stop_target = -1.0) {
    for (std::uint64_t j = 0; j < budget; ++j) {
        std::vector<double> gains = oracle.filter_gains(a.ordered(), pool);
        std::vector<ElementId> survivors;
        survivors.reserve(pool.size());
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (gains[i] >= f_a / k) survivors.push_back(pool[i]);
        pool = std::move(survivors);
        if (done_early(pool)) return {std::move(pool), false};

        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<std::size_t> lambdas = linear_seq_lambdas(epsilon, k, pool.size());
        std::vector<double> values = oracle.prefix_values(a.ordered(), pool, lambdas);
        std::vector<char> passed(lambdas.size(), 0);
        for (std::size_t i = 0; i < lambdas.size(); ++i) {
            std::size_t prev = i == 0 ? 0 : lambdas[i - 1];
            double block_size = static_cast<double>(lambdas[i] - prev);
            double block_gain = values[i + 1] - values[i];
            if (block_gain / block_size >= (1.0 - epsilon) * values[i] / k) passed[i] = 1;
        }
        std::ptrdiff_t chosen = select_linear_seq_prefix(lambdas, passed, k);
        if (chosen >= 0) {
            std::size_t take = lambdas[chosen];
            for (std::size_t i = 0; i < take; ++i) a.insert(pool[i]);
            f_a = values[chosen + 1];
        }
        if (early_stop_target >= 0.0 && !a.empty()) {
            double suffix_value = oracle.evaluate(a.suffix(k));
            if (suffix_value >= early_stop_target) return {std::move(pool), true};
        }
    }
    return {std::move(pool), false};
}

}  // namespace detail

struct LinearSeqOptions {
    bool two_phase = false;   // warm up on the 5k highest-value singletons first
    bool early_stop = false;  // stop once the ratio is certified against the singleton bound
};

/// Preprocessing algorithm: constant-factor approximation with linear
/// expected query complexity. On success returns the last k elements
/// added to the accumulated candidate set.
inline RunRecord linear_seq(const Oracle& oracle, int k, double epsilon, std::uint64_t seed,
                            const LinearSeqOptions& options = {}) {
    if (!(epsilon > 0.0 && epsilon < 0.5))
        throw std::invalid_argument("epsilon must be in (0, 1/2)");
    const int n = oracle.ground_size();
    RunRecord record{"linear_seq", n, k, seed, {}, 0, 0, 0, 0.0, false};
    detail::Stopwatch timer;
    auto start = oracle.ledger().snapshot();
    if (k <= 0) return detail::finish_record(record, oracle, start, timer, {}, false);
    if (k >= n) {
        std::vector<ElementId> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        return detail::finish_record(record, oracle, start, timer, std::move(all), false);
    }

    std::vector<double> singletons = oracle.singleton_values();
    ElementId best = 0;
    for (ElementId i = 1; i < n; ++i)
        if (singletons[i] > singletons[best]) best = i;
    if (singletons[best] <= 0.0)  // f is identically zero by subadditivity
        return detail::finish_record(record, oracle, start, timer, {best}, false);

    SolutionSet a(n);
    a.insert(best);
    double f_a = singletons[best];
    std::mt19937_64 rng(detail::mix_seed(seed, 1));
    const std::uint64_t budget = linear_seq_iteration_budget(epsilon, n);

    double early_target = -1.0;
    if (options.early_stop) {
        std::vector<double> sorted(singletons);
        std::nth_element(sorted.begin(), sorted.begin() + (k - 1), sorted.end(),
                         std::greater<>());
        double top_k_sum = 0.0;
        for (int i = 0; i < k; ++i) top_k_sum += sorted[i];
        early_target = ls_ratio_bound(epsilon) * top_k_sum;
    }

    auto empty_pool = [](const std::vector<ElementId>& pool) { return pool.empty(); };
    std::vector<ElementId> leftover;
    bool certified = false;
    if (options.two_phase) {
        std::vector<SingletonValue> order(n);
        for (ElementId i = 0; i < n; ++i) order[i] = {i, singletons[i]};
        std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
            if (x.value != y.value) return x.value > y.value;
            return x.id < y.id;
        });
        std::size_t head = std::min<std::size_t>(static_cast<std::size_t>(5) * k, order.size());
        std::vector<ElementId> phase_one, phase_two;
        for (std::size_t i = 0; i < order.size(); ++i)
            (i < head ? phase_one : phase_two).push_back(order[i].id);
        auto first = detail::linear_seq_loop(oracle, a, f_a, k, epsilon, budget,
                                             std::move(phase_one), rng, empty_pool, early_target);
        certified = first.stopped_early;
        if (!certified) {
            auto second = detail::linear_seq_loop(oracle, a, f_a, k, epsilon, budget,
                                                  std::move(phase_two), rng, empty_pool,
                                                  early_target);
            leftover = std::move(second.remaining);
            certified = second.stopped_early;
        }
    } else {
        std::vector<ElementId> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        auto result = detail::linear_seq_loop(oracle, a, f_a, k, epsilon, budget,
                                              std::move(pool), rng, empty_pool, early_target);
        leftover = std::move(result.remaining);
        certified = result.stopped_early;
    }

    bool failed = !certified && !leftover.empty();
    return detail::finish_record(record, oracle, start, timer, a.suffix(k), failed);
}

/// LinearSeq variant that stops once at most k candidates survive and
/// returns the better of the suffix and the surviving pool.
inline RunRecord low_adap_linear_seq(const Oracle& oracle, int k, double epsilon,
                                     std::uint64_t seed) {
    if (!(epsilon > 0.0 && epsilon < 0.5))
        throw std::invalid_argument("epsilon must be in (0, 1/2)");
    const int n = oracle.ground_size();
    RunRecord record{"low_adap_linear_seq", n, k, seed, {}, 0, 0, 0, 0.0, false};
    detail::Stopwatch timer;
    auto start = oracle.ledger().snapshot();
    if (k <= 0) return detail::finish_record(record, oracle, start, timer, {}, false);
    if (k >= n) {
        std::vector<ElementId> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        return detail::finish_record(record, oracle, start, timer, std::move(all), false);
    }

    std::vector<double> singletons = oracle.singleton_values();
    ElementId best = 0;
    for (ElementId i = 1; i < n; ++i)
        if (singletons[i] > singletons[best]) best = i;
    if (singletons[best] <= 0.0)
        return detail::finish_record(record, oracle, start, timer, {best}, false);

    SolutionSet a(n);
    a.insert(best);
    double f_a = singletons[best];
    std::mt19937_64 rng(detail::mix_seed(seed, 1));
    const std::uint64_t budget = low_adap_iteration_budget(epsilon, n, k);
    std::vector<ElementId> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    auto small_enough = [k](const std::vector<ElementId>& v) {
        return v.size() <= static_cast<std::size_t>(k);
    };
    auto result = detail::linear_seq_loop(oracle, a, f_a, k, epsilon, budget, std::move(pool),
                                          rng, small_enough);
    if (result.remaining.size() > static_cast<std::size_t>(k))
        return detail::finish_record(record, oracle, start, timer, a.suffix(k), true);

    std::vector<ElementId> suffix = a.suffix(k);
    double suffix_value = oracle.evaluate(suffix);
    double pool_value = oracle.evaluate(result.remaining);
    auto winner = pool_value > suffix_value ? std::move(result.remaining) : std::move(suffix);
    return detail::finish_record(record, oracle, start, timer, std::move(winner), false);
}

struct ThresholdSeqResult {
    std::vector<ElementId> chosen;
    bool failed = false;
};

/// Adds up to k elements whose marginal gains clear τ, guaranteeing
/// average gain at least (1-ε)τ/(1+ε) over the elements added.
inline ThresholdSeqResult threshold_seq(const Oracle& oracle, int k, double delta,
                                        double epsilon, double tau, std::mt19937_64& rng) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must be in (0, 1)");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must be in (0, 1)");
    if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
    if (k == 0) return {{}, false};
    if (k < 0) throw std::invalid_argument("k must be >= 0");

    const int n = oracle.ground_size();
    const std::uint64_t budget = threshold_seq_iteration_budget(epsilon, n, delta);
    SolutionSet a(n);
    std::vector<ElementId> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;

    for (std::uint64_t j = 0; j < budget; ++j) {
        std::vector<double> gains = oracle.filter_gains(a.ordered(), pool);
        std::vector<ElementId> survivors;
        survivors.reserve(pool.size());
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (gains[i] >= tau) survivors.push_back(pool[i]);
        pool = std::move(survivors);
        if (pool.empty()) return {a.ordered(), false};

        std::shuffle(pool.begin(), pool.end(), rng);
        std::size_t s = std::min(static_cast<std::size_t>(k) - a.size(), pool.size());
        std::vector<std::size_t> lambdas = threshold_seq_lambdas(epsilon, s);
        std::vector<double> values = oracle.prefix_values(a.ordered(), pool, lambdas);
        std::vector<char> passed(lambdas.size(), 0);
        for (std::size_t i = 0; i < lambdas.size(); ++i) {
            double avg_gain = (values[i + 1] - values[0]) / static_cast<double>(lambdas[i]);
            if (avg_gain >= (1.0 - epsilon) * tau) passed[i] = 1;
        }
        std::size_t chosen = select_threshold_prefix(lambdas, passed);
        // The geometric family jumps by more than (1+eps) at small
        // indices, so the prefix past the last passing block can drag
        // the average below the guarantee; shrink to the passing block
        // when that happens so f(A)/|A| >= (1-eps)tau/(1+eps) always
        // holds on success.
        auto realized_avg = [&](std::size_t i) {
            return (values[i + 1] - values[0]) / static_cast<double>(lambdas[i]);
        };
        while (chosen > 0 && !passed[chosen] &&
               realized_avg(chosen) < (1.0 - epsilon) * tau / (1.0 + epsilon))
            --chosen;
        for (std::size_t i = 0; i < lambdas[chosen]; ++i) a.insert(pool[i]);
        if (a.size() >= static_cast<std::size_t>(k)) return {a.ordered(), false};
    }
    return {a.ordered(), true};
}

/// Boosts an α-approximate solution value Γ (Γ ≤ OPT ≤ Γ/α) to the
/// ratio 1 - 1/e - ε via descending-threshold ThresholdSeq calls.
inline RunRecord parallel_greedy_boost(const Oracle& oracle, int k, double alpha, double gamma,
                                       double epsilon, std::uint64_t seed) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must be in (0, 1]");
    if (!(epsilon > 0.0 && epsilon < 1.0 - 1.0 / std::exp(1.0)))
        throw std::invalid_argument("epsilon must be in (0, 1 - 1/e)");
    if (!(gamma >= 0.0)) throw std::invalid_argument("gamma must be >= 0");
    const int n = oracle.ground_size();
    RunRecord record{"parallel_greedy_boost", n, k, seed, {}, 0, 0, 0, 0.0, false};
    detail::Stopwatch timer;
    auto start = oracle.ledger().snapshot();
    if (k <= 0 || gamma <= 0.0)
        return detail::finish_record(record, oracle, start, timer, {}, false);

    const double delta = pgb_delta(epsilon, alpha);
    double tau = gamma / (alpha * k);
    const double floor_tau = gamma / (3.0 * k);
    SolutionSet a(n);
    std::mt19937_64 rng(detail::mix_seed(seed, 2));
    while (tau >= floor_tau) {
        tau *= 1.0 - epsilon;
        Oracle restricted = oracle.restricted(a.ordered());
        ThresholdSeqResult result = threshold_seq(
            restricted, k - static_cast<int>(a.size()), delta, epsilon / 3.0, tau, rng);
        if (result.failed)
            return detail::finish_record(record, oracle, start, timer, a.ordered(), true);
        for (ElementId x : result.chosen) a.insert(x);
        if (a.size() >= static_cast<std::size_t>(k)) break;
    }
    return detail::finish_record(record, oracle, start, timer, a.ordered(), false);
}

/// The composed pipeline: LinearSeq supplies Γ = f(A') and
/// α = ls_ratio_bound(ε_ls), then ParallelGreedyBoost upgrades the
/// guarantee to 1 - 1/e - ε. Both stages share the oracle's ledger.
inline RunRecord ls_pgb(const Oracle& oracle, int k, double epsilon, double epsilon_ls,
                        std::uint64_t seed) {
    RunRecord record{"ls_pgb", oracle.ground_size(), k, seed, {}, 0, 0, 0, 0.0, false};
    detail::Stopwatch timer;
    auto start = oracle.ledger().snapshot();
    RunRecord pre = linear_seq(oracle, k, epsilon_ls, seed);
    if (pre.failed) return detail::finish_record(record, oracle, start, timer, {}, true);
    RunRecord boosted = parallel_greedy_boost(oracle, k, ls_ratio_bound(epsilon_ls), pre.value,
                                              epsilon, detail::mix_seed(seed, 3));
    return detail::finish_record(record, oracle, start, timer, std::move(boosted.solution),
                                 boosted.failed);
}

/// Deterministic single pass in id order, adding u iff Δ(u|A) ≥ f(A)/k;
/// the last k elements added satisfy 4 f(A') ≥ OPT. Exactly n queries
/// in n adaptive rounds.
inline RunRecord adaptive_linear(const Oracle& oracle, int k) {
    const int n = oracle.ground_size();
    if (k < 1 || k > n) throw std::invalid_argument("k out of range");
    RunRecord record{"adaptive_linear", n, k, 0, {}, 0, 0, 0, 0.0, false};
    detail::Stopwatch timer;
    auto start = oracle.ledger().snapshot();
    SolutionSet a(n);
    EvalCursor cursor = oracle.session();
    double f_a = 0.0;
    for (ElementId u = 0; u < n; ++u) {
        double gain = cursor.gain(u);
        if (gain >= f_a / k) {
            f_a += gain;
            cursor.commit(u, f_a);
            a.insert(u);
        }
    }
    return detail::finish_record(record, oracle, start, timer, a.suffix(k), false);
}

/// Standard greedy with lazy re-evaluation of stale upper bounds.
/// Output matches plain greedy with ties broken by the smaller id.
inline RunRecord lazy_greedy(const Oracle& oracle, int k) {
    const int n = oracle.ground_size();
    if (k < 1 || k > n) throw std::invalid_argument("k out of range");
    RunRecord record{"lazy_greedy", n, k, 0, {}, 0, 0, 0, 0.0, false};
    detail::Stopwatch timer;
    auto start = oracle.ledger().snapshot();

    struct Entry {
        double bound;
        ElementId id;
        int epoch;  // |A| when the bound was computed; -1 = never
        bool operator<(const Entry& other) const {
            if (bound != other.bound) return bound < other.bound;
            return id > other.id;
        }
    };
    std::priority_queue<Entry> heap;
    for (ElementId i = 0; i < n; ++i)
        heap.push({std::numeric_limits<double>::infinity(), i, -1});

    SolutionSet a(n);
    EvalCursor cursor = oracle.session();
    double f_a = 0.0;
    while (a.size() < static_cast<std::size_t>(k) && !heap.empty()) {
        Entry top = heap.top();
        heap.pop();
        if (top.epoch == static_cast<int>(a.size())) {
            f_a += top.bound;
            cursor.commit(top.id, f_a);
            a.insert(top.id);
        } else {
            heap.push({cursor.gain(top.id), top.id, static_cast<int>(a.size())});
        }
    }
    return detail::finish_record(record, oracle, start, timer, a.ordered(), false);
}

/// Exhaustive optimum over all k-subsets; ties resolve to the
/// lexicographically smallest subset. Test oracle only.
inline std::pair<std::vector<ElementId>, double> brute_force_opt(const Oracle& oracle, int k) {
    const int n = oracle.ground_size();
    if (k < 0 || k > n) throw std::invalid_argument("k out of range");
    double combos = 1.0;
    for (int i = 0; i < k; ++i) combos = combos * (n - i) / (i + 1);
    if (combos > 1e6) throw std::invalid_argument("instance too large for brute force");

    std::vector<ElementId> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    std::vector<ElementId> best_set;
    double best_value = -1.0;
    while (true) {
        double v = oracle.raw_value(subset);
        if (v > best_value) {
            best_value = v;
            best_set = subset;
        }
        // next combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    if (k == 0) best_value = oracle.raw_value({});
    return {best_set, best_value};
}

}  // namespace submax
