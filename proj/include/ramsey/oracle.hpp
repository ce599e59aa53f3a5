#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/pattern.hpp"

#include <cstddef>

// Brute-force reference implementations. Exponential time, deliberately
// unoptimised, and sharing no search code with detectors.hpp: they read only
// Graph::order() and Graph::adjacent().
namespace ramsey::oracle {

inline constexpr std::size_t kMaxContainsOrder = 16;
inline constexpr std::size_t kMaxMatchingOrder = 14;

/// Enumerates every vertex subset of the pattern's order and every role
/// assignment inside it. Throws PreconditionError when |g| > 16.
bool oracle_contains(const Graph& g, const PatternSpec& p);

/// Maximum matching by recursive edge inclusion/exclusion. Throws
/// PreconditionError when |g| > 14.
std::size_t oracle_matching_number(const Graph& g);

} // namespace ramsey::oracle
