#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include "submax/core.hpp"
#include "submax/parallel.hpp"

namespace submax {

class Evaluator;

/// A monotone submodular set function over a dense ground set.
/// value() treats its argument as a set: duplicate ids are ignored.
/// Instance data is immutable after construction, so a single objective
/// may be evaluated concurrently from any number of threads.
class Objective {
public:
    virtual ~Objective() = default;
    virtual int ground_size() const = 0;
    virtual double value(std::span<const ElementId> s) const = 0;
    virtual std::unique_ptr<Evaluator> make_evaluator() const;
};

/// Incremental evaluation state for one growing set. Not thread-safe;
/// each worker owns its own evaluator. Objectives may override
/// make_evaluator() with a fast path, but the values returned must
/// match the naive value() formula exactly.
class Evaluator {
public:
    virtual ~Evaluator() = default;
    virtual void push(ElementId x) = 0;
    virtual void pop_to(std::size_t size) = 0;
    virtual std::size_t size() const = 0;
    virtual double current_value() = 0;
};

namespace detail {

class GenericEvaluator final : public Evaluator {
public:
    explicit GenericEvaluator(const Objective& objective) : objective_(objective) {}

    void push(ElementId x) override {
        elements_.push_back(x);
        dirty_ = true;
    }
    void pop_to(std::size_t size) override {
        elements_.resize(size);
        dirty_ = true;
    }
    std::size_t size() const override { return elements_.size(); }
    double current_value() override {
        if (dirty_) {
            cached_ = objective_.value(elements_);
            dirty_ = false;
        }
        return cached_;
    }

private:
    const Objective& objective_;
    std::vector<ElementId> elements_;
    double cached_ = 0.0;
    bool dirty_ = true;
};

}  // namespace detail

inline std::unique_ptr<Evaluator> Objective::make_evaluator() const {
    return std::make_unique<detail::GenericEvaluator>(*this);
}

struct SingletonValue {
    ElementId id;
    double value;
};

class EvalCursor;

/// Instrumented gateway for all objective evaluations. Every f-query
/// goes through an Oracle and is charged to the shared ledger: single
/// evaluations cost one query and one round; the batched round
/// operations cost one round for the whole batch. A restricted oracle
/// evaluates f(base ∪ ·) and charges the parent's ledger.
class Oracle {
public:
    explicit Oracle(std::shared_ptr<const Objective> objective)
        : objective_(std::move(objective)),
          ledger_(std::make_shared<QueryLedger>()),
          ground_{objective_->ground_size()} {}

    const GroundSet& ground() const { return ground_; }
    int ground_size() const { return ground_.n; }
    QueryLedger& ledger() const { return *ledger_; }
    const Objective& objective() const { return *objective_; }
    const std::vector<ElementId>& base() const { return base_; }

    /// f(base ∪ S). One query, one round.
    double evaluate(std::span<const ElementId> s) const {
        ground_.require_valid(s);
        ledger_->add_queries(1);
        ledger_->add_round();
        return raw_value(s);
    }

    /// f(base ∪ S ∪ {x}) - f_of_s with a caller-cached f_of_s.
    /// One query, one round.
    double marginal_gain(ElementId x, std::span<const ElementId> s, double f_of_s) const {
        ground_.require_valid(x);
        ground_.require_valid(s);
        ledger_->add_queries(1);
        ledger_->add_round();
        std::vector<ElementId> joined(s.begin(), s.end());
        joined.push_back(x);
        return raw_value(joined) - f_of_s;
    }

    /// Uninstrumented evaluation, for result capture and test oracles.
    double raw_value(std::span<const ElementId> s) const {
        if (base_.empty()) return objective_->value(s);
        std::vector<ElementId> joined(base_);
        joined.insert(joined.end(), s.begin(), s.end());
        return objective_->value(joined);
    }

    /// Handle for f(base ∪ A ∪ ·), sharing this oracle's ledger.
    Oracle restricted(std::span<const ElementId> a) const {
        ground_.require_valid(a);
        Oracle child(*this);
        child.base_.insert(child.base_.end(), a.begin(), a.end());
        return child;
    }

    /// One filter pass: marginal gain of every x in V on top of base ∪ A.
    /// |V| queries, one round; gains land in pre-sized slots so the
    /// result is identical for any worker count.
    std::vector<double> filter_gains(std::span<const ElementId> a,
                                     std::span<const ElementId> v) const {
        ground_.require_valid(a);
        ground_.require_valid(v);
        std::vector<double> gains(v.size());
        par::for_chunks(v.size(), [&](std::size_t begin, std::size_t end) {
            auto ev = objective_->make_evaluator();
            prime(*ev, a);
            const std::size_t mark = ev->size();
            const double base_value = ev->current_value();
            for (std::size_t i = begin; i < end; ++i) {
                ev->push(v[i]);
                gains[i] = ev->current_value() - base_value;
                ev->pop_to(mark);
            }
        });
        ledger_->add_queries(v.size());
        ledger_->add_round();
        return gains;
    }

    /// One block pass: f(base ∪ A ∪ {perm[0..c)}) for c in {0} ∪ cuts.
    /// cuts must be ascending prefix lengths ≤ |perm|. Costs
    /// cuts.size() + 1 queries and one round; each distinct prefix
    /// value is computed once and shared across block tests.
    std::vector<double> prefix_values(std::span<const ElementId> a,
                                      std::span<const ElementId> perm,
                                      std::span<const std::size_t> cuts) const {
        ground_.require_valid(a);
        ground_.require_valid(perm);
        std::vector<double> values;
        values.reserve(cuts.size() + 1);
        auto ev = objective_->make_evaluator();
        prime(*ev, a);
        values.push_back(ev->current_value());
        std::size_t done = 0;
        for (std::size_t cut : cuts) {
            while (done < cut) ev->push(perm[done++]);
            values.push_back(ev->current_value());
        }
        ledger_->add_queries(cuts.size() + 1);
        ledger_->add_round();
        return values;
    }

    /// The m largest singleton values, descending, ties to the smaller
    /// id. Costs exactly n queries in one round.
    std::vector<SingletonValue> top_singletons(int m) const;

    /// All n singleton values in id order. n queries, one round.
    std::vector<double> singleton_values() const {
        std::vector<double> vals(ground_.n);
        par::for_chunks(static_cast<std::size_t>(ground_.n),
                        [&](std::size_t begin, std::size_t end) {
                            auto ev = objective_->make_evaluator();
                            prime(*ev, {});
                            const std::size_t mark = ev->size();
                            const double base_value = ev->current_value();
                            for (std::size_t i = begin; i < end; ++i) {
                                ev->push(static_cast<ElementId>(i));
                                vals[i] = ev->current_value() - base_value;
                                ev->pop_to(mark);
                            }
                        });
        ledger_->add_queries(static_cast<std::uint64_t>(ground_.n));
        ledger_->add_round();
        return vals;
    }

    /// Sum of the k largest singleton values; an upper bound on OPT
    /// for any monotone submodular f.
    double singleton_sum_upper_bound(int k) const {
        if (k < 1 || k > ground_.n) throw std::invalid_argument("k out of range");
        auto top = top_singletons(k);
        double sum = 0.0;
        for (const auto& sv : top) sum += sv.value;
        return sum;
    }

    /// Cursor for sequential algorithms: per-element gains cost one
    /// query and one round each; committing an element is free once
    /// its gain has been paid for.
    EvalCursor session(std::span<const ElementId> a = {}) const;

private:
    void prime(Evaluator& ev, std::span<const ElementId> a) const {
        for (ElementId x : base_) ev.push(x);
        for (ElementId x : a) ev.push(x);
    }

    std::shared_ptr<const Objective> objective_;
    std::vector<ElementId> base_;
    std::shared_ptr<QueryLedger> ledger_;
    GroundSet ground_;
    friend class EvalCursor;
};

class EvalCursor {
public:
    EvalCursor(const Oracle& oracle, std::span<const ElementId> a)
        : oracle_(oracle), evaluator_(oracle.objective().make_evaluator()) {
        oracle.prime(*evaluator_, a);
        mark_ = evaluator_->size();
        value_ = evaluator_->current_value();
    }

    double value() const { return value_; }

    double gain(ElementId x) {
        oracle_.ground().require_valid(x);
        oracle_.ledger().add_queries(1);
        oracle_.ledger().add_round();
        evaluator_->push(x);
        double v = evaluator_->current_value();
        evaluator_->pop_to(mark_);
        return v - value_;
    }

    void commit(ElementId x, double value_after) {
        evaluator_->push(x);
        mark_ = evaluator_->size();
        value_ = value_after;
    }

private:
    const Oracle& oracle_;
    std::unique_ptr<Evaluator> evaluator_;
    std::size_t mark_ = 0;
    double value_ = 0.0;
};

inline EvalCursor Oracle::session(std::span<const ElementId> a) const {
    return EvalCursor(*this, a);
}

inline std::vector<SingletonValue> Oracle::top_singletons(int m) const {
    if (m < 1 || m > ground_.n) throw std::invalid_argument("m out of range");
    std::vector<double> vals = singleton_values();
    std::vector<SingletonValue> order(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i)
        order[i] = {static_cast<ElementId>(i), vals[i]};
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.value != b.value) return a.value > b.value;
        return a.id < b.id;
    });
    order.resize(m);
    return order;
}

struct SpotCheckReport {
    bool passed = true;
    int trials = 0;
    std::string witness;  // description of the first violation, if any
};

/// Randomized diminishing-returns and monotonicity check: draws
/// S ⊆ T ⊆ N, x ∉ T and verifies Δ(x|T) ≤ Δ(x|S) and f(S) ≤ f(T)
/// up to a relative tolerance of 1e-9.
inline SpotCheckReport check_submodularity(const Oracle& oracle, int trials,
                                           std::mt19937_64& rng) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    SpotCheckReport report;
    report.trials = trials;
    const int n = oracle.ground_size();
    if (n == 0) return report;
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::bernoulli_distribution in_t(0.5);
    std::bernoulli_distribution in_s(0.5);
    for (int t = 0; t < trials; ++t) {
        ElementId x = pick(rng);
        std::vector<ElementId> small, large;
        for (ElementId e = 0; e < n; ++e) {
            if (e == x) continue;
            if (!in_t(rng)) continue;
            large.push_back(e);
            if (in_s(rng)) small.push_back(e);
        }
        double f_s = oracle.evaluate(small);
        double f_t = oracle.evaluate(large);
        double gain_s = oracle.marginal_gain(x, small, f_s);
        double gain_t = oracle.marginal_gain(x, large, f_t);
        double tol = 1e-9 * std::max(1.0, std::fabs(f_t));
        if (f_s > f_t + tol) {
            report.passed = false;
            std::ostringstream msg;
            msg << "monotonicity violated at trial " << t << ": f(S)=" << f_s
                << " > f(T)=" << f_t;
            report.witness = msg.str();
            return report;
        }
        if (gain_t > gain_s + tol) {
            report.passed = false;
            std::ostringstream msg;
            msg << "diminishing returns violated at trial " << t << ": x=" << x
                << " gain(x|T)=" << gain_t << " > gain(x|S)=" << gain_s;
            report.witness = msg.str();
            return report;
        }
    }
    return report;
}

}  // namespace submax
