#pragma once

#include "ramsey/constructions.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/pattern.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ramsey {

/// What produced the coloring being certified.
struct ConstructionDescriptor {
    std::string family = "unknown";
    std::string spec;
    std::vector<int> params;
    std::optional<int> claimed_bound;
    std::vector<Block> blocks;

    static ConstructionDescriptor from(const Construction& c);

    bool operator==(const ConstructionDescriptor&) const = default;
};

enum class Verdict { Verified, Refuted };

struct Counterexample {
    Color color = Color::Red;
    Embedding vertices;

    bool operator==(const Counterexample&) const = default;
};

struct Certificate {
    ConstructionDescriptor construction;
    std::size_t order = 0;
    PatternSpec red_target;
    std::optional<PatternSpec> blue_target;  ///< absent: only the red side was checked
    Verdict result = Verdict::Refuted;
    std::optional<Counterexample> counterexample;  ///< present iff refuted
    std::string coloring_sha;
    std::string detector_version;
    std::int64_t elapsed_ms = 0;

    bool verified() const noexcept { return result == Verdict::Verified; }
    bool operator==(const Certificate&) const = default;
};

/// Hex SHA-256 of canonical_rbc(c).
std::string coloring_sha256(const TwoColoring& c);

/// Verified iff red avoids red_target and blue avoids blue_target. The red
/// side is checked first and a refutation there skips the blue check.
Certificate verify(const TwoColoring& coloring, const PatternSpec& red_target, const PatternSpec& blue_target,
                   ConstructionDescriptor descriptor = {});
Certificate verify(const Construction& c);

/// Treats g as the red graph: verified iff g avoids `avoid` and (when given)
/// complement(g) avoids `avoid_complement`.
Certificate verify_ramsey_witness(const Graph& g, const PatternSpec& avoid,
                                  const std::optional<PatternSpec>& avoid_complement);

/// Re-checks a certificate against a coloring: hash match, verdict/counterexample
/// consistency, and that any counterexample is a genuine embedding.
bool certificate_consistent(const Certificate& cert, const TwoColoring& coloring);

nlohmann::json to_json(const Certificate& cert);
/// Throws ParseError on missing or ill-typed fields.
Certificate certificate_from_json(const nlohmann::json& j);

// ---- table reproduction ------------------------------------------------------

/// One published lower bound with whether it is known to be exact.
struct TableEntry {
    int n;
    int value;
    bool exact;
};

/// Lower bounds on R(K_3, K_n), 3 <= n <= 15, as published in the small
/// Ramsey numbers survey.
const std::vector<TableEntry>& k3_clique_table();
/// Lower bounds on R(K_4 - e, K_n), 3 <= n <= 10.
const std::vector<TableEntry>& k4me_clique_table();

struct TableRow {
    std::string name;  ///< "w5w6" or "w7"
    std::vector<int> n;
    std::vector<int> derived;    ///< 2 * R_lb - 1 from the source table
    std::vector<int> published;  ///< stored wheel-versus-clique row
    std::vector<int> mismatched_n;

    bool ok() const noexcept { return mismatched_n.empty(); }
};

/// Derives the W5/W6-versus-K_n row (n = 5..15) and the W7-versus-K_n row
/// (n = 5..10) and diffs them against the stored published rows.
std::vector<TableRow> compute_tables();

/// compute_tables(), throwing std::runtime_error on any mismatch.
std::vector<TableRow> reproduce_tables();

} // namespace ramsey
