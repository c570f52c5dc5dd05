#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "submax/objectives.hpp"
#include "submax/oracle.hpp"

using namespace submax;

namespace {

std::shared_ptr<ModularObjective> modular312() {
    return std::make_shared<ModularObjective>(std::vector<double>{3.0, 1.0, 2.0});
}

std::shared_ptr<MaxCoverObjective> path3() {
    return std::make_shared<MaxCoverObjective>(
        CoverageGraph::from_edges(3, {{0, 1}, {1, 2}}));
}

// Deliberately supermodular: f(S) = |S|^2 violates diminishing returns.
class SquaredCardinality final : public Objective {
public:
    explicit SquaredCardinality(int n) : n_(n) {}
    int ground_size() const override { return n_; }
    double value(std::span<const ElementId> s) const override {
        auto u = detail::as_unique_sorted(s);
        return static_cast<double>(u.size()) * static_cast<double>(u.size());
    }

private:
    int n_;
};

}  // namespace

TEST_CASE("evaluate counts one query and returns the set value") {
    Oracle oracle(modular312());
    std::vector<ElementId> s{0, 2};
    CHECK(oracle.evaluate(s) == doctest::Approx(5.0));
    CHECK(oracle.ledger().queries() == 1);
    CHECK(oracle.evaluate({}) == 0.0);
    CHECK(oracle.ledger().queries() == 2);

    Oracle cover(path3());
    std::vector<ElementId> mid{1};
    CHECK(cover.evaluate(mid) == doctest::Approx(3.0));

    std::vector<ElementId> bad{7};
    CHECK_THROWS_AS(oracle.evaluate(bad), std::invalid_argument);
}

TEST_CASE("marginal_gain uses the cached base value") {
    Oracle oracle(modular312());
    std::vector<ElementId> s{0};
    auto before = oracle.ledger().queries();
    CHECK(oracle.marginal_gain(1, s, 3.0) == doctest::Approx(1.0));
    CHECK(oracle.ledger().queries() == before + 1);

    Oracle cover(path3());
    std::vector<ElementId> mid{1};
    CHECK(cover.marginal_gain(0, mid, 3.0) == doctest::Approx(0.0));

    // x already in S
    std::vector<ElementId> with0{0};
    CHECK(oracle.marginal_gain(0, with0, 3.0) == doctest::Approx(0.0));

    CHECK_THROWS_AS(oracle.marginal_gain(99, s, 3.0), std::invalid_argument);
}

TEST_CASE("restricted handle evaluates f(A ∪ ·) and shares the ledger") {
    Oracle oracle(modular312());
    std::vector<ElementId> a{0};
    Oracle sub = oracle.restricted(a);
    CHECK(sub.evaluate({}) == doctest::Approx(3.0));
    std::vector<ElementId> one{1};
    CHECK(sub.evaluate(one) == doctest::Approx(4.0));
    CHECK(oracle.ledger().queries() == 2);  // child queries land in the parent ledger

    // restriction of a submodular monotone f stays submodular monotone
    Oracle cover(path3());
    std::vector<ElementId> mid{1};
    Oracle restricted = cover.restricted(mid);
    std::mt19937_64 rng(7);
    CHECK(check_submodularity(restricted, 200, rng).passed);
}

TEST_CASE("top_singletons orders by value then id, n queries one round") {
    Oracle oracle(modular312());
    auto start = oracle.ledger().snapshot();
    auto top = oracle.top_singletons(2);
    auto delta = oracle.ledger().since(start);
    CHECK(delta.queries == 3);
    CHECK(delta.rounds == 1);
    REQUIRE(top.size() == 2);
    CHECK(top[0].id == 0);
    CHECK(top[0].value == doctest::Approx(3.0));
    CHECK(top[1].id == 2);
    CHECK(top[1].value == doctest::Approx(2.0));

    auto all = oracle.top_singletons(3);
    CHECK(all[0].id == 0);
    CHECK(all[1].id == 2);
    CHECK(all[2].id == 1);

    Oracle ties(std::make_shared<ModularObjective>(std::vector<double>{1.0, 1.0, 1.0}));
    auto tied = ties.top_singletons(2);
    CHECK(tied[0].id == 0);
    CHECK(tied[1].id == 1);

    CHECK_THROWS_AS(oracle.top_singletons(0), std::invalid_argument);
    CHECK_THROWS_AS(oracle.top_singletons(4), std::invalid_argument);
}

TEST_CASE("singleton_sum_upper_bound dominates OPT") {
    Oracle oracle(modular312());
    CHECK(oracle.singleton_sum_upper_bound(2) == doctest::Approx(5.0));

    Oracle cover(path3());
    CHECK(cover.singleton_sum_upper_bound(2) == doctest::Approx(5.0));  // 3 + 2 >= OPT = 3
    CHECK(cover.singleton_sum_upper_bound(3) >= cover.raw_value(std::vector<ElementId>{0, 1, 2}));
}

TEST_CASE("check_submodularity accepts submodular and rejects supermodular") {
    std::mt19937_64 rng(42);
    Oracle modular(modular312());
    CHECK(check_submodularity(modular, 100, rng).passed);

    Oracle cover(path3());
    CHECK(check_submodularity(cover, 100, rng).passed);

    Oracle squared(std::make_shared<SquaredCardinality>(6));
    auto report = check_submodularity(squared, 200, rng);
    CHECK_FALSE(report.passed);
    CHECK_FALSE(report.witness.empty());
}

TEST_CASE("filter_gains and prefix_values charge batched rounds") {
    Oracle oracle(modular312());
    auto start = oracle.ledger().snapshot();
    std::vector<ElementId> v{0, 1, 2};
    auto gains = oracle.filter_gains({}, v);
    auto delta = oracle.ledger().since(start);
    CHECK(delta.queries == 3);
    CHECK(delta.rounds == 1);
    CHECK(gains[0] == doctest::Approx(3.0));
    CHECK(gains[1] == doctest::Approx(1.0));
    CHECK(gains[2] == doctest::Approx(2.0));

    start = oracle.ledger().snapshot();
    std::vector<std::size_t> cuts{1, 3};
    auto values = oracle.prefix_values({}, v, cuts);
    delta = oracle.ledger().since(start);
    CHECK(delta.queries == 3);  // |cuts| + 1
    CHECK(delta.rounds == 1);
    REQUIRE(values.size() == 3);
    CHECK(values[0] == doctest::Approx(0.0));
    CHECK(values[1] == doctest::Approx(3.0));
    CHECK(values[2] == doctest::Approx(6.0));
}

TEST_CASE("ledger counters are monotone across operations") {
    Oracle oracle(path3());
    std::uint64_t q = 0, r = 0;
    auto step = [&]() {
        CHECK(oracle.ledger().queries() >= q);
        CHECK(oracle.ledger().rounds() >= r);
        q = oracle.ledger().queries();
        r = oracle.ledger().rounds();
    };
    oracle.evaluate({});
    step();
    oracle.top_singletons(3);
    step();
    std::vector<ElementId> v{0, 1, 2};
    oracle.filter_gains({}, v);
    step();
}

TEST_CASE("solution set suffix equals the brute-force last-k slice") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 30);
        SolutionSet set(n);
        std::vector<ElementId> inserted;
        for (int i = 0; i < n; ++i) {
            ElementId x = static_cast<ElementId>(rng() % n);
            if (set.insert(x)) inserted.push_back(x);
            CHECK(set.contains(x));
        }
        for (std::size_t k = 0; k <= inserted.size() + 2; ++k) {
            std::size_t take = std::min(k, inserted.size());
            std::vector<ElementId> expected(inserted.end() - take, inserted.end());
            CHECK(set.suffix(k) == expected);
        }
    }
}

TEST_CASE("evaluation session pays one query per gain, none per commit") {
    Oracle oracle(modular312());
    EvalCursor cursor = oracle.session();
    auto start = oracle.ledger().snapshot();
    double g = cursor.gain(0);
    CHECK(g == doctest::Approx(3.0));
    cursor.commit(0, g);
    CHECK(cursor.gain(2) == doctest::Approx(2.0));
    auto delta = oracle.ledger().since(start);
    CHECK(delta.queries == 2);
    CHECK(delta.rounds == 2);
}
