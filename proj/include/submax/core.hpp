#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace submax {

using ElementId = int;

/// Dense ground set: elements are ids 0..n-1.
struct GroundSet {
    int n = 0;

    bool contains(ElementId x) const { return x >= 0 && x < n; }

    void require_valid(ElementId x) const {
        if (!contains(x)) throw std::invalid_argument("element id out of range");
    }

    void require_valid(std::span<const ElementId> s) const {
        for (ElementId x : s) require_valid(x);
    }
};

/// Insertion-ordered set of element ids with O(1) membership and
/// access to the last k elements added.
class SolutionSet {
public:
    SolutionSet() = default;
    explicit SolutionSet(int ground_size) : member_(ground_size, 0) {}

    bool contains(ElementId x) const {
        return x >= 0 && static_cast<std::size_t>(x) < member_.size() && member_[x];
    }

    bool insert(ElementId x) {
        if (static_cast<std::size_t>(x) >= member_.size()) member_.resize(x + 1, 0);
        if (member_[x]) return false;
        member_[x] = 1;
        ordered_.push_back(x);
        return true;
    }

    std::size_t size() const { return ordered_.size(); }
    bool empty() const { return ordered_.empty(); }
    const std::vector<ElementId>& ordered() const { return ordered_; }

    /// Last min(k, size) inserted ids, preserving insertion order.
    std::vector<ElementId> suffix(std::size_t k) const {
        std::size_t take = std::min(k, ordered_.size());
        return {ordered_.end() - static_cast<std::ptrdiff_t>(take), ordered_.end()};
    }

private:
    std::vector<ElementId> ordered_;
    std::vector<char> member_;
};

/// Monotone counters of oracle evaluations and adaptive rounds.
/// One round = one synchronization barrier; queries issued within a
/// round may be accumulated concurrently.
class QueryLedger {
public:
    struct Snapshot {
        std::uint64_t queries = 0;
        std::uint64_t rounds = 0;
    };

    void add_queries(std::uint64_t n) { queries_.fetch_add(n, std::memory_order_relaxed); }
    void add_round() { rounds_.fetch_add(1, std::memory_order_relaxed); }

    std::uint64_t queries() const { return queries_.load(std::memory_order_relaxed); }
    std::uint64_t rounds() const { return rounds_.load(std::memory_order_relaxed); }

    Snapshot snapshot() const { return {queries(), rounds()}; }

    /// Counter deltas since an earlier snapshot.
    Snapshot since(const Snapshot& start) const {
        return {queries() - start.queries, rounds() - start.rounds};
    }

private:
    std::atomic<std::uint64_t> queries_{0};
    std::atomic<std::uint64_t> rounds_{0};
};

}  // namespace submax
