#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "submax/generators.hpp"
#include "submax/objectives.hpp"

using namespace submax;

namespace {

CoverageGraph path3() { return CoverageGraph::from_edges(3, {{0, 1}, {1, 2}}); }

CoverageGraph k4() {
    return CoverageGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

std::vector<ElementId> shuffled_with_dups(std::span<const ElementId> s, std::mt19937_64& rng) {
    std::vector<ElementId> out(s.begin(), s.end());
    if (!out.empty()) out.push_back(out[rng() % out.size()]);
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

}  // namespace

TEST_CASE("coverage graph construction") {
    CoverageGraph g = CoverageGraph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.edge_count() == 1);
    CHECK(g.edges() == std::vector<std::pair<ElementId, ElementId>>{{0, 1}});
    CHECK_THROWS_AS(CoverageGraph::from_edges(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(CoverageGraph::from_edges(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("max cover on small graphs") {
    MaxCoverObjective cover(path3());
    std::vector<ElementId> mid{1};
    CHECK(cover.value(mid) == doctest::Approx(3.0));
    CHECK(cover.value({}) == 0.0);
    std::vector<ElementId> end{0};
    CHECK(cover.value(end) == doctest::Approx(2.0));

    MaxCoverObjective clique(k4());
    std::vector<ElementId> one{0};
    CHECK(clique.value(one) == doctest::Approx(4.0));

    // strict semantics: an isolated node covers nothing by selecting itself
    CoverageGraph with_isolated = CoverageGraph::from_edges(3, {{0, 1}});
    MaxCoverObjective strict(with_isolated, true);
    MaxCoverObjective closed(with_isolated, false);
    std::vector<ElementId> iso{2};
    CHECK(strict.value(iso) == doctest::Approx(0.0));
    CHECK(closed.value(iso) == doctest::Approx(1.0));
}

TEST_CASE("coverage evaluator matches the naive formula") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        MaxCoverObjective cover(gen_er(30, 0.1, rng()));
        auto ev = cover.make_evaluator();
        std::vector<ElementId> s;
        for (int step = 0; step < 15; ++step) {
            if (!s.empty() && rng() % 4 == 0) {
                std::size_t to = rng() % s.size();
                s.resize(to);
                ev->pop_to(to);
            } else {
                ElementId x = static_cast<ElementId>(rng() % 30);
                s.push_back(x);
                ev->push(x);
            }
            CHECK(ev->current_value() == cover.value(s));
        }
    }
}

TEST_CASE("image summarization over a similarity matrix") {
    SimilarityMatrix sim;
    sim.n = 2;
    sim.data = {1.0, 0.5, 0.5, 1.0};
    ImageSummObjective obj(sim);
    std::vector<ElementId> first{0};
    CHECK(obj.value(first) == doctest::Approx(1.5));
    std::vector<ElementId> both{0, 1};
    CHECK(obj.value(both) == doctest::Approx(2.0));
    CHECK(obj.value({}) == 0.0);
}

TEST_CASE("tweet summarization takes square roots per keyword") {
    KeywordCorpus corpus;
    corpus.vocabulary_size = 1;
    corpus.tweets.push_back({9, {0}});
    corpus.tweets.push_back({16, {0}});
    TweetSummObjective obj(corpus);
    std::vector<ElementId> first{0};
    CHECK(obj.value(first) == doctest::Approx(3.0));
    std::vector<ElementId> both{0, 1};
    CHECK(obj.value(both) == doctest::Approx(5.0));
    CHECK(obj.value({}) == 0.0);
}

TEST_CASE("influence on a star graph") {
    CoverageGraph star = CoverageGraph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    InfluenceObjective obj(star, 0.25);
    std::vector<ElementId> hub{0};
    // 1 for the hub plus 4 * (1 - 0.75) for the leaves
    CHECK(obj.value(hub) == doctest::Approx(2.0));
    CHECK(obj.value({}) == 0.0);
    std::vector<ElementId> all{0, 1, 2, 3, 4};
    CHECK(obj.value(all) == doctest::Approx(5.0));
    CHECK_THROWS_AS(InfluenceObjective(star, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(InfluenceObjective(star, 1.0), std::invalid_argument);
}

TEST_CASE("revenue applies the concave exponent per user") {
    RevenueObjective obj = RevenueObjective::from_dense(1, 1, std::vector<double>{4.0}, 0.5);
    std::vector<ElementId> one{0};
    CHECK(obj.value(one) == doctest::Approx(2.0));
    CHECK(obj.value({}) == 0.0);
    CHECK(obj.alpha() == doctest::Approx(0.5));

    // sparse construction agrees with the dense one
    std::vector<double> dense{1.0, 0.0, 2.0, 3.0};  // 2 users x 2 candidates
    RevenueObjective from_dense = RevenueObjective::from_dense(2, 2, dense, 0.9);
    RevenueObjective sparse(2, {{{0, 1.0}, {1, 2.0}}, {{1, 3.0}}}, 0.9);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        std::vector<ElementId> s;
        for (ElementId j = 0; j < 2; ++j)
            if (rng() % 2) s.push_back(j);
        CHECK(from_dense.value(s) == doctest::Approx(sparse.value(s)));
    }

    // unit-weight graph instance: selecting node j earns deg(j) users
    RevenueObjective graph_rev = RevenueObjective::from_graph(path3(), 0.5);
    std::vector<ElementId> mid{1};
    CHECK(graph_rev.value(mid) == doctest::Approx(2.0));  // two users at weight 1

    CHECK_THROWS_AS(RevenueObjective(1, {{{0, 1.0}}}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(RevenueObjective(1, {{{0, -1.0}}}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(RevenueObjective(1, {{{2, 1.0}}}, 0.5), std::invalid_argument);
}

TEST_CASE("traffic sums node weights over the closed neighborhood") {
    TrafficObjective obj(path3(), {1.0, 2.0, 3.0});
    std::vector<ElementId> mid{1};
    CHECK(obj.value(mid) == doctest::Approx(6.0));
    std::vector<ElementId> end{0};
    CHECK(obj.value(end) == doctest::Approx(3.0));
    CHECK(obj.value({}) == 0.0);

    CHECK_THROWS_AS(TrafficObjective(path3(), {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(TrafficObjective(path3(), {1.0, -2.0, 3.0}), std::invalid_argument);

    // uniform unit weights reduce to max cover
    std::mt19937_64 rng(7);
    CoverageGraph g = gen_er(25, 0.15, rng());
    TrafficObjective uniform(g, std::vector<double>(25, 1.0));
    MaxCoverObjective cover(g);
    for (int t = 0; t < 20; ++t) {
        std::vector<ElementId> s;
        for (ElementId x = 0; x < 25; ++x)
            if (rng() % 3 == 0) s.push_back(x);
        CHECK(uniform.value(s) == doctest::Approx(cover.value(s)));
    }
}

TEST_CASE("all objectives are set functions: order and duplicates ignored") {
    std::mt19937_64 rng(9);
    CoverageGraph g = gen_ba(20, 2, rng());
    std::vector<double> weights(20, 1.5);
    std::vector<double> features(20 * 4);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (double& f : features) f = unit(rng);
    KeywordCorpus corpus;
    corpus.vocabulary_size = 6;
    for (int t = 0; t < 20; ++t)
        corpus.tweets.push_back({static_cast<std::uint64_t>(rng() % 50),
                                 {static_cast<int>(rng() % 6)}});

    std::vector<std::shared_ptr<Objective>> objectives{
        std::make_shared<MaxCoverObjective>(g),
        std::make_shared<ImageSummObjective>(cosine_similarity(20, 4, features)),
        std::make_shared<TweetSummObjective>(corpus),
        std::make_shared<InfluenceObjective>(g, 0.3),
        std::make_shared<RevenueObjective>(RevenueObjective::from_graph(g)),
        std::make_shared<TrafficObjective>(g, weights),
        std::make_shared<ModularObjective>(std::vector<double>(20, 0.7)),
    };
    for (const auto& obj : objectives) {
        CHECK(obj->value({}) == 0.0);
        for (int t = 0; t < 10; ++t) {
            std::vector<ElementId> s;
            for (ElementId x = 0; x < 20; ++x)
                if (rng() % 3 == 0) s.push_back(x);
            double base = obj->value(s);
            auto scrambled = shuffled_with_dups(s, rng);
            CHECK(obj->value(scrambled) == doctest::Approx(base));
        }
    }
}

TEST_CASE("cosine similarity") {
    std::vector<double> features{1.0, 0.0, 1.0, 1.0};
    SimilarityMatrix sim = cosine_similarity(2, 2, features);
    CHECK(sim.at(0, 0) == doctest::Approx(1.0));
    CHECK(sim.at(1, 1) == doctest::Approx(1.0));
    CHECK(sim.at(0, 1) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(sim.at(1, 0) == doctest::Approx(sim.at(0, 1)));

    std::vector<double> with_zero{0.0, 0.0, 1.0, 0.0};
    SimilarityMatrix z = cosine_similarity(2, 2, with_zero);
    CHECK(z.at(0, 1) == 0.0);
    CHECK(z.at(0, 0) == doctest::Approx(1.0));

    CHECK_THROWS_AS(cosine_similarity(2, 3, features), std::invalid_argument);
}

TEST_CASE("erdos-renyi generator") {
    CHECK(gen_er(4, 1.0, 1).edge_count() == 6);
    CHECK(gen_er(4, 0.0, 1).edge_count() == 0);
    CHECK(gen_er(1, 0.5, 1).edge_count() == 0);

    CoverageGraph a = gen_er(200, 0.05, 42);
    CoverageGraph b = gen_er(200, 0.05, 42);
    CHECK(a.edges() == b.edges());
    CHECK(gen_er(200, 0.05, 43).edges() != a.edges());

    // edge count should land near p * C(n,2) = 995
    double expected = 0.05 * 200 * 199 / 2;
    CHECK(a.edge_count() > expected * 0.7);
    CHECK(a.edge_count() < expected * 1.3);

    CHECK_THROWS_AS(gen_er(0, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_er(4, 1.5, 1), std::invalid_argument);
}

TEST_CASE("watts-strogatz generator") {
    CoverageGraph lattice = gen_ws(12, 4, 0.0, 1);
    CHECK(lattice.edge_count() == 12 * 4 / 2);
    for (const auto& nbrs : lattice.adjacency) CHECK(nbrs.size() == 4);

    CoverageGraph rewired = gen_ws(100, 6, 0.5, 7);
    CHECK(rewired.edge_count() == 100 * 6 / 2);
    CHECK(gen_ws(100, 6, 0.5, 7).edges() == rewired.edges());

    CHECK_THROWS_AS(gen_ws(10, 3, 0.1, 1), std::invalid_argument);   // odd degree
    CHECK_THROWS_AS(gen_ws(10, 10, 0.1, 1), std::invalid_argument);  // degree >= n
    CHECK_THROWS_AS(gen_ws(10, 4, 1.5, 1), std::invalid_argument);
}

TEST_CASE("barabasi-albert generator") {
    CoverageGraph g = gen_ba(50, 3, 11);
    CHECK(g.edge_count() == 3 + 3 * (50 - 3));  // C(3,2) + m(n-m)
    CHECK(gen_ba(50, 3, 11).edges() == g.edges());

    CoverageGraph complete = gen_ba(4, 3, 1);
    CHECK(complete.edge_count() == 6);

    CoverageGraph tree = gen_ba(30, 1, 5);
    CHECK(tree.edge_count() == 29);

    CHECK_THROWS_AS(gen_ba(5, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_ba(5, 5, 1), std::invalid_argument);
}
