#include "ramsey/graph.hpp"

#include "ramsey/error.hpp"

#include <algorithm>
#include <string>

namespace ramsey {

Graph::Graph(std::size_t order) : adjacency_(order, VertexSet(order)) {}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
    GraphBuilder b(order);
    for (auto [u, v] : edges) {
        b.add_edge(u, v);
    }
    return std::move(b).build();
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (Vertex v = 0; v < order(); ++v) {
        best = std::max(best, degree(v));
    }
    return best;
}

std::size_t Graph::min_degree() const noexcept {
    if (order() == 0) {
        return 0;
    }
    std::size_t best = order();
    for (Vertex v = 0; v < order(); ++v) {
        best = std::min(best, degree(v));
    }
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v = adjacency_[u].next_from(u + 1); v != VertexSet::npos; v = adjacency_[u].next_from(v + 1)) {
            out.emplace_back(u, v);
        }
    }
    return out;
}

GraphBuilder::GraphBuilder(std::size_t order) : graph_(order) {}

void GraphBuilder::check(Vertex u, Vertex v) const {
    if (u >= order() || v >= order()) {
        throw PreconditionError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") out of range for order " + std::to_string(order()));
    }
    if (u == v) {
        throw PreconditionError("self-loop at vertex " + std::to_string(u));
    }
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
    check(u, v);
    if (!graph_.adjacency_[u].test(v)) {
        graph_.adjacency_[u].set(v);
        graph_.adjacency_[v].set(u);
        ++graph_.edge_count_;
    }
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
    check(u, v);
    if (graph_.adjacency_[u].test(v)) {
        graph_.adjacency_[u].reset(v);
        graph_.adjacency_[v].reset(u);
        --graph_.edge_count_;
    }
    return *this;
}

GraphBuilder& GraphBuilder::add_clique(Vertex first, std::size_t size) {
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) {
            add_edge(first + static_cast<Vertex>(i), first + static_cast<Vertex>(j));
        }
    }
    return *this;
}

GraphBuilder& GraphBuilder::add_biclique(Vertex first_a, std::size_t size_a, Vertex first_b, std::size_t size_b) {
    for (std::size_t i = 0; i < size_a; ++i) {
        for (std::size_t j = 0; j < size_b; ++j) {
            add_edge(first_a + static_cast<Vertex>(i), first_b + static_cast<Vertex>(j));
        }
    }
    return *this;
}

GraphBuilder& GraphBuilder::add_graph(const Graph& g, Vertex offset) {
    for (auto [u, v] : g.edges()) {
        add_edge(offset + u, offset + v);
    }
    return *this;
}

Graph GraphBuilder::build() && { return std::move(graph_); }

TwoColoring::TwoColoring(Graph red) : red_(std::move(red)), blue_(complement(red_)) {}

TwoColoring TwoColoring::swapped() const { return TwoColoring(blue_); }

Graph complement(const Graph& g) {
    const auto n = g.order();
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) {
                b.add_edge(u, v);
            }
        }
    }
    return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    GraphBuilder b(g.order() + h.order());
    b.add_graph(g, 0);
    b.add_graph(h, static_cast<Vertex>(g.order()));
    return std::move(b).build();
}

Graph cone(const Graph& g) {
    GraphBuilder b(g.order() + 1);
    b.add_graph(g, 0);
    const auto apex = static_cast<Vertex>(g.order());
    for (Vertex v = 0; v < apex; ++v) {
        b.add_edge(v, apex);
    }
    return std::move(b).build();
}

Graph blow_up(const Graph& g, const Graph& h) {
    const auto k = h.order();
    GraphBuilder b(g.order() * k);
    const auto index = [k](Vertex u, std::size_t i) { return static_cast<Vertex>(u * k + i); };
    for (Vertex u = 0; u < g.order(); ++u) {
        b.add_graph(h, index(u, 0));
    }
    for (auto [u, v] : g.edges()) {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                b.add_edge(index(u, i), index(v, j));
            }
        }
    }
    return std::move(b).build();
}

Graph circulant(std::size_t n, std::span<const std::size_t> offsets) {
    for (auto s : offsets) {
        if (s < 1 || s > n / 2) {
            throw PreconditionError("circulant offset " + std::to_string(s) + " outside 1.." +
                                    std::to_string(n / 2));
        }
    }
    GraphBuilder b(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (auto s : offsets) {
            b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>((u + s) % n));
        }
    }
    return std::move(b).build();
}

Graph regular_graph(std::size_t n, std::size_t d) {
    if (d >= n && !(n == 0 && d == 0)) {
        throw PreconditionError("regular_graph: degree " + std::to_string(d) + " must be below order " +
                                std::to_string(n));
    }
    if ((n * d) % 2 != 0) {
        throw PreconditionError("regular_graph: no " + std::to_string(d) + "-regular graph on " +
                                std::to_string(n) + " vertices (n*d is odd)");
    }
    std::vector<std::size_t> offsets;
    for (std::size_t s = 1; s <= d / 2; ++s) {
        offsets.push_back(s);
    }
    if (d % 2 == 1) {
        offsets.push_back(n / 2);
    }
    return circulant(n, offsets);
}

Graph complete_multipartite(std::span<const std::size_t> part_sizes) {
    std::size_t total = 0;
    for (auto s : part_sizes) {
        total += s;
    }
    GraphBuilder b(total);
    Vertex first_a = 0;
    for (std::size_t a = 0; a < part_sizes.size(); ++a) {
        auto first_b = static_cast<Vertex>(first_a + part_sizes[a]);
        for (std::size_t c = a + 1; c < part_sizes.size(); ++c) {
            b.add_biclique(first_a, part_sizes[a], first_b, part_sizes[c]);
            first_b += static_cast<Vertex>(part_sizes[c]);
        }
        first_a += static_cast<Vertex>(part_sizes[a]);
    }
    return std::move(b).build();
}

Graph cycle_with_chords(std::size_t len, std::span<const Edge> chords) {
    if (len < 3) {
        throw PreconditionError("cycle_with_chords: length must be at least 3");
    }
    GraphBuilder b(len);
    for (std::size_t i = 0; i < len; ++i) {
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % len));
    }
    for (auto [u, v] : chords) {
        if (u >= len || v >= len || u == v) {
            throw PreconditionError("cycle_with_chords: invalid chord (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ")");
        }
        if (b.has_edge(u, v)) {
            throw PreconditionError("cycle_with_chords: chord (" + std::to_string(u) + ", " + std::to_string(v) +
                                    ") duplicates an existing edge");
        }
        b.add_edge(u, v);
    }
    return std::move(b).build();
}

Graph induced(const Graph& g, std::span<const Vertex> vertices) {
    VertexSet seen(g.order());
    for (auto v : vertices) {
        if (v >= g.order()) {
            throw PreconditionError("induced: vertex " + std::to_string(v) + " out of range");
        }
        if (seen.test(v)) {
            throw PreconditionError("induced: vertex " + std::to_string(v) + " listed twice");
        }
        seen.set(v);
    }
    GraphBuilder b(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (g.adjacent(vertices[i], vertices[j])) {
                b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    return std::move(b).build();
}

Graph induced(const Graph& g, const VertexSet& vertices) {
    const auto list = vertices.to_vector();
    return induced(g, std::span<const Vertex>(list));
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_graph(std::size_t n) {
    GraphBuilder b(n);
    b.add_clique(0, n);
    return std::move(b).build();
}

Graph cycle_graph(std::size_t n) { return cycle_with_chords(n, {}); }

Graph path_graph(std::size_t n) {
    GraphBuilder b(n);
    for (std::size_t i = 1; i < n; ++i) {
        b.add_edge(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
    }
    return std::move(b).build();
}

} // namespace ramsey
