#pragma once

// Shared helpers for the unit tests. The brute-force checks here are written
// from the definitions and deliberately avoid the library's detectors.

#include "ramsey/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace testing {

using ramsey::Edge;
using ramsey::Graph;
using ramsey::Vertex;

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

/// Greedy random maximal graph avoiding a property: edges are tried in random
/// order and kept only while `bad` stays false.
inline Graph random_free_graph(std::size_t n, std::mt19937_64& rng, double keep,
                               const std::function<bool(const Graph&)>& bad) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::bernoulli_distribution coin(keep);
    ramsey::GraphBuilder b(n);
    for (auto [u, v] : pairs) {
        if (!coin(rng)) {
            continue;
        }
        b.add_edge(u, v);
        if (bad(b.snapshot())) {
            b.remove_edge(u, v);
        }
    }
    return std::move(b).build();
}

/// Calls f on every k-subset of 0..n-1 (ascending). Stops when f returns true.
inline bool any_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<Vertex>&)>& f) {
    std::vector<Vertex> s(k);
    std::function<bool(std::size_t, Vertex)> rec = [&](std::size_t depth, Vertex from) {
        if (depth == k) {
            return f(s);
        }
        for (Vertex v = from; v + (k - depth) <= n; ++v) {
            s[depth] = v;
            if (rec(depth + 1, v + 1)) {
                return true;
            }
        }
        return false;
    };
    return rec(0, 0);
}

inline bool brute_clique(const Graph& g, std::size_t k) {
    return any_subset(g.order(), k, [&](const std::vector<Vertex>& s) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                if (!g.adjacent(s[i], s[j])) {
                    return false;
                }
            }
        }
        return true;
    });
}

inline bool brute_independent(const Graph& g, std::size_t k) {
    return any_subset(g.order(), k, [&](const std::vector<Vertex>& s) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                if (g.adjacent(s[i], s[j])) {
                    return false;
                }
            }
        }
        return true;
    });
}

/// Largest vertex-disjoint edge set by trying every edge subset size downward.
inline std::size_t brute_matching(const Graph& g) {
    const auto edges = g.edges();
    std::size_t best = 0;
    std::vector<bool> used(g.order(), false);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t size) {
        best = std::max(best, size);
        for (std::size_t j = i; j < edges.size(); ++j) {
            auto [u, v] = edges[j];
            if (!used[u] && !used[v]) {
                used[u] = used[v] = true;
                rec(j + 1, size + 1);
                used[u] = used[v] = false;
            }
        }
    };
    rec(0, 0);
    return best;
}

inline Graph petersen() {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, e);
}

inline Graph star(std::size_t leaves) {
    std::vector<Edge> e;
    for (Vertex i = 1; i <= leaves; ++i) {
        e.emplace_back(0, i);
    }
    return Graph::from_edges(leaves + 1, e);
}

inline Graph matching_graph(std::size_t edges) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < edges; ++i) {
        e.emplace_back(2 * i, 2 * i + 1);
    }
    return Graph::from_edges(2 * edges, e);
}

inline Graph c7_chords() {
    const std::vector<Edge> chords{{1, 4}, {2, 5}, {3, 6}};
    return ramsey::cycle_with_chords(7, chords);
}

inline std::size_t component_count(const Graph& g) {
    std::vector<int> seen(g.order(), 0);
    std::size_t count = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) {
            continue;
        }
        ++count;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            const auto u = stack.back();
            stack.pop_back();
            for (Vertex v = 0; v < g.order(); ++v) {
                if (g.adjacent(u, v) && !seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
    }
    return count;
}

} // namespace testing
