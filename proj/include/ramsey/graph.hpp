#pragma once

#include "ramsey/vertex_set.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace ramsey {

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..order-1.
///
/// Immutable once built: every combinator below returns a new graph. Each
/// vertex owns a bitset row so neighbourhood intersections are word-parallel.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph.
    explicit Graph(std::size_t order);

    /// Throws PreconditionError on self-loops or out-of-range endpoints.
    /// Repeated edges are merged.
    static Graph from_edges(std::size_t order, std::span<const Edge> edges);

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const noexcept { return adjacency_[u].test(v); }
    const VertexSet& neighbors(Vertex v) const noexcept { return adjacency_[v]; }
    std::size_t degree(Vertex v) const noexcept { return adjacency_[v].count(); }

    std::size_t max_degree() const noexcept;
    std::size_t min_degree() const noexcept;

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    friend class GraphBuilder;

    std::vector<VertexSet> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Mutable staging area for a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t order);

    std::size_t order() const noexcept { return graph_.order(); }

    GraphBuilder& add_edge(Vertex u, Vertex v);
    GraphBuilder& remove_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }

    /// Complete graph on the vertex block [first, first + size).
    GraphBuilder& add_clique(Vertex first, std::size_t size);
    /// All edges between two disjoint blocks.
    GraphBuilder& add_biclique(Vertex first_a, std::size_t size_a, Vertex first_b, std::size_t size_b);
    /// Copies g's edges onto vertices offset..offset+|g|-1.
    GraphBuilder& add_graph(const Graph& g, Vertex offset);

    Graph build() &&;
    Graph snapshot() const { return graph_; }

private:
    void check(Vertex u, Vertex v) const;

    Graph graph_;
};

/// A red/blue colouring of the edges of K_N; red is stored, blue is its complement.
class TwoColoring {
public:
    TwoColoring() = default;
    explicit TwoColoring(Graph red);

    std::size_t order() const noexcept { return red_.order(); }
    const Graph& red() const noexcept { return red_; }
    const Graph& blue() const noexcept { return blue_; }

    /// The colouring with red and blue exchanged.
    TwoColoring swapped() const;

    bool operator==(const TwoColoring& other) const { return red_ == other.red_; }

private:
    Graph red_;
    Graph blue_;
};

enum class Color { Red, Blue };

// ---- construction algebra -------------------------------------------------

Graph complement(const Graph& g);

/// h is re-indexed after g; no cross edges.
Graph disjoint_union(const Graph& g, const Graph& h);

/// K_1 + g; the new apex is the last vertex (index |g|).
Graph cone(const Graph& g);

/// Lexicographic product g[h]. Vertex (u, i) gets index u * |h| + i;
/// (u,i) ~ (v,j) iff (u = v and i ~ j in h) or u ~ v in g.
Graph blow_up(const Graph& g, const Graph& h);

/// Circulant graph: u ~ v iff the cyclic distance lies in `offsets`.
/// Each offset must satisfy 1 <= s <= n/2.
Graph circulant(std::size_t n, std::span<const std::size_t> offsets);

/// The canonical d-regular circulant on n vertices:
/// offsets {1..d/2}, plus n/2 when d is odd. Requires 0 <= d < n and n*d even.
Graph regular_graph(std::size_t n, std::size_t d);

Graph complete_multipartite(std::span<const std::size_t> part_sizes);

/// C_len on 0..len-1 (i ~ i+1 mod len) plus the listed chords.
Graph cycle_with_chords(std::size_t len, std::span<const Edge> chords);

/// Subgraph induced on `vertices`, re-indexed densely in the order given.
Graph induced(const Graph& g, std::span<const Vertex> vertices);
Graph induced(const Graph& g, const VertexSet& vertices);

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

} // namespace ramsey
