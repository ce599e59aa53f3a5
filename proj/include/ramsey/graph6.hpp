#pragma once

#include "ramsey/graph.hpp"

#include <string>
#include <string_view>

namespace ramsey {

/// Standard graph6 encoding (no trailing newline). Orders >= 63 use the
/// '~'-prefixed long forms.
std::string to_graph6(const Graph& g);

/// Decodes one graph6 string. An optional ">>graph6<<" prefix and trailing
/// whitespace are accepted. Throws ParseError on bad characters, a wrong body
/// length, or non-zero padding bits.
Graph from_graph6(std::string_view text);

} // namespace ramsey
