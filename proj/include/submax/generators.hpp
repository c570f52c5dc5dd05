#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <unordered_set>

#include "submax/objectives.hpp"

namespace submax {

/// Erdős–Rényi G(n, p): each unordered pair independently with
/// probability p. Uses geometric skipping over the pair sequence so
/// sparse graphs cost O(edges), not O(n²).
inline CoverageGraph gen_er(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0,1]");
    std::vector<std::pair<ElementId, ElementId>> edges;
    const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (p >= 1.0) {
        for (ElementId u = 0; u < n; ++u)
            for (ElementId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        return CoverageGraph::from_edges(n, std::move(edges));
    }
    if (p > 0.0 && total > 0) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const double log_q = std::log1p(-p);
        std::uint64_t pos = 0;
        // Cursor mapping linear pair index -> (u, v).
        ElementId u = 0;
        std::uint64_t row_start = 0;
        std::uint64_t row_len = static_cast<std::uint64_t>(n) - 1;
        auto locate = [&](std::uint64_t idx) {
            while (idx >= row_start + row_len) {
                row_start += row_len;
                --row_len;
                ++u;
            }
            return std::pair<ElementId, ElementId>{u, static_cast<ElementId>(u + 1 + (idx - row_start))};
        };
        while (true) {
            double r = unit(rng);
            std::uint64_t skip =
                r >= 1.0 ? 0 : static_cast<std::uint64_t>(std::floor(std::log(1.0 - r) / log_q));
            if (skip > total || pos + skip >= total) break;
            pos += skip;
            edges.push_back(locate(pos));
            ++pos;
            if (pos >= total) break;
        }
    }
    return CoverageGraph::from_edges(n, std::move(edges));
}

/// Watts–Strogatz: ring lattice with ring_degree nearest neighbors per
/// node, each lattice edge rewired with probability p. The edge count
/// n * ring_degree / 2 is preserved.
inline CoverageGraph gen_ws(int n, int ring_degree, double p, std::uint64_t seed) {
    if (ring_degree % 2 != 0 || ring_degree < 2 || ring_degree >= n)
        throw std::invalid_argument("ring_degree must be even and in [2, n)");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0,1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> node(0, n - 1);

    auto key = [n](ElementId a, ElementId b) {
        if (a > b) std::swap(a, b);
        return static_cast<std::uint64_t>(a) * n + b;
    };
    std::unordered_set<std::uint64_t> present;
    std::vector<std::pair<ElementId, ElementId>> edges;
    for (int j = 1; j <= ring_degree / 2; ++j)
        for (ElementId u = 0; u < n; ++u) {
            ElementId v = static_cast<ElementId>((u + j) % n);
            edges.emplace_back(u, v);
            present.insert(key(u, v));
        }
    std::vector<int> degree(n, ring_degree);

    for (auto& [u, v] : edges) {
        if (unit(rng) >= p) continue;
        if (degree[u] >= n - 1) continue;  // no free endpoint to rewire to
        ElementId w;
        do {
            w = node(rng);
        } while (w == u || present.count(key(u, w)));
        present.erase(key(u, v));
        present.insert(key(u, w));
        --degree[v];
        ++degree[w];
        v = w;
    }
    return CoverageGraph::from_edges(n, std::move(edges));
}

/// Barabási–Albert preferential attachment seeded from an m-node
/// complete core; each new node attaches m distinct edges with
/// probability proportional to current degree. Edge count is
/// C(m,2) + m * (n - m).
inline CoverageGraph gen_ba(int n, int m, std::uint64_t seed) {
    if (m < 1 || m >= n) throw std::invalid_argument("m must satisfy 1 <= m < n");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<ElementId, ElementId>> edges;
    std::vector<ElementId> endpoints;  // one entry per edge endpoint
    for (ElementId u = 0; u < m; ++u)
        for (ElementId v = u + 1; v < m; ++v) {
            edges.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    std::vector<char> picked(n, 0);
    std::vector<ElementId> targets;
    for (ElementId v = m; v < n; ++v) {
        targets.clear();
        while (static_cast<int>(targets.size()) < m) {
            ElementId t;
            if (endpoints.empty()) {
                // m = 1 bootstrap: the core node still has degree 0.
                std::uniform_int_distribution<ElementId> uniform(0, v - 1);
                t = uniform(rng);
            } else {
                std::uniform_int_distribution<std::size_t> slot(0, endpoints.size() - 1);
                t = endpoints[slot(rng)];
            }
            if (picked[t]) continue;
            picked[t] = 1;
            targets.push_back(t);
        }
        for (ElementId t : targets) {
            picked[t] = 0;
            edges.emplace_back(t, v);
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return CoverageGraph::from_edges(n, std::move(edges));
}

}  // namespace submax
