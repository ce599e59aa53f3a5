#pragma once

#include "ramsey/graph.hpp"

#include <cstddef>
#include <vector>

namespace ramsey {

/// Maximum matching of a general graph (Edmonds' blossom algorithm, O(V^3)).
/// Returned edges satisfy u < v and are sorted by u.
std::vector<Edge> maximum_matching(const Graph& g);

std::size_t matching_number(const Graph& g);

} // namespace ramsey
