#pragma once

#include "ramsey/graph.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

enum class PatternKind { Fan, Wheel, Kipas, Clique, Cycle, Path, Matching, K4MinusE };

/// A target subgraph. Sizes follow the conventions used throughout:
///   Fan(n)      K_1 + nK_2, order 2n+1, n >= 1
///   Wheel(n)    K_1 + C_{n-1}, order n, n >= 4
///   Kipas(n)    K_1 + P_{n-1}, order n, n >= 3
///   Clique(k)   k >= 1;  Cycle(l) l >= 3;  Path(p) p >= 1 vertices;
///   Matching(n) n >= 1 edges;  K4MinusE has no size.
struct PatternSpec {
    PatternKind kind = PatternKind::Clique;
    std::size_t size = 1;

    static PatternSpec fan(std::size_t n) { return {PatternKind::Fan, n}; }
    static PatternSpec wheel(std::size_t n) { return {PatternKind::Wheel, n}; }
    static PatternSpec kipas(std::size_t n) { return {PatternKind::Kipas, n}; }
    static PatternSpec clique(std::size_t k) { return {PatternKind::Clique, k}; }
    static PatternSpec cycle(std::size_t l) { return {PatternKind::Cycle, l}; }
    static PatternSpec path(std::size_t p) { return {PatternKind::Path, p}; }
    static PatternSpec matching(std::size_t n) { return {PatternKind::Matching, n}; }
    static PatternSpec k4_minus_e() { return {PatternKind::K4MinusE, 0}; }

    /// Number of vertices of the pattern graph.
    std::size_t order() const noexcept;

    bool operator==(const PatternSpec&) const = default;
};

/// Throws PreconditionError when the size is below the kind's minimum.
void validate(const PatternSpec& p);

/// `fan:<n>` `wheel:<order>` `kipas:<order>` `clique:<k>` `cycle:<len>`
/// `path:<order>` `matching:<n>` `k4me`.
PatternSpec parse_pattern(std::string_view text);
std::string to_string(const PatternSpec& p);

/// The pattern as a concrete graph, vertex-labelled in embedding order.
Graph pattern_graph(const PatternSpec& p);

/// Embeddings are vertex lists in a fixed per-kind layout:
///   Fan       hub, a1, b1, ..., an, bn     (a_i b_i are the spokes' rim edges)
///   Wheel     hub, c1, ..., c_{n-1}        (rim in cycle order)
///   Kipas     hub, p1, ..., p_{n-1}        (rim in path order)
///   Clique    any order
///   Cycle     cycle order
///   Path      path order
///   Matching  a1, b1, ..., an, bn
///   K4MinusE  u, v, a, b                   (uv plus both of u,v joined to a and b)
/// That is, position i of the embedding plays vertex i of pattern_graph(p).
using Embedding = std::vector<Vertex>;

/// True iff `e` has the right length, distinct in-range vertices, and every
/// pattern edge maps onto an edge of g.
bool is_embedding(const Graph& g, const PatternSpec& p, std::span<const Vertex> e);

} // namespace ramsey
