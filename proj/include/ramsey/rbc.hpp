#pragma once

#include "ramsey/graph.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ramsey {

/// `.rbc` colouring files:
///
///     rbc <N>
///     # free-form comments; "# key value" lines are kept as metadata
///     u v          red edge, 0-indexed, u < v, one per line
///
/// Blue is implicit (every pair not listed). LF line endings.
struct RbcFile {
    TwoColoring coloring;
    std::vector<std::pair<std::string, std::string>> metadata;

    /// First metadata value for `key`, or empty.
    std::string meta(std::string_view key) const;
};

/// Header plus sorted red edges, no comments. This is the byte string hashed
/// into certificates.
std::string canonical_rbc(const TwoColoring& c);

std::string to_rbc(const TwoColoring& c, const std::vector<std::pair<std::string, std::string>>& metadata = {});

/// Throws ParseError on a bad header, malformed edge lines, out-of-range or
/// repeated edges, self-loops, or u >= v.
RbcFile parse_rbc(std::string_view text);

RbcFile read_rbc_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace ramsey
