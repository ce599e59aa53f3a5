#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/pattern.hpp"

#include <cstddef>
#include <optional>

namespace ramsey {

// Exact containment detectors. "Contains" always means as a (not necessarily
// induced) subgraph. Every find_* returns an embedding in the layout documented
// in pattern.hpp, or nullopt when the pattern is absent. No timeouts: callers
// bound instance sizes.

/// Branch and bound with greedy-colouring bounds.
std::optional<Embedding> find_clique(const Graph& g, std::size_t k);
bool has_clique(const Graph& g, std::size_t k);

/// An edge uv with two common neighbours.
std::optional<Embedding> find_k4_minus_e(const Graph& g);
bool has_k4_minus_e(const Graph& g);

/// Cycle on exactly `len` vertices, in cycle order.
std::optional<Embedding> find_cycle_of_length(const Graph& g, std::size_t len);
bool has_cycle_of_length(const Graph& g, std::size_t len);

/// Path on exactly `order` vertices, in path order.
std::optional<Embedding> find_path_of_order(const Graph& g, std::size_t order);
bool has_path_of_order(const Graph& g, std::size_t order);

std::optional<Embedding> find_matching(const Graph& g, std::size_t n);

/// Dispatch on the pattern kind. Fan, wheel and kipas search each centre's
/// neighbourhood for a matching, cycle or path respectively.
std::optional<Embedding> find_pattern(const Graph& g, const PatternSpec& p);
bool contains_pattern(const Graph& g, const PatternSpec& p);

/// Exact number of k-cliques, stopping once `cap` is reached.
std::size_t count_cliques(const Graph& g, std::size_t k, std::size_t cap);

/// Version tag recorded in certificates.
inline constexpr const char* kDetectorVersion = "ramsey-detectors/1.0";

} // namespace ramsey
