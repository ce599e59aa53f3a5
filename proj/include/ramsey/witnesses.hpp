#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/pattern.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

/// The (K_3, K_n) and (K_4 - e, K_n) Ramsey-graph families used by blow-ups.
enum class WitnessPair { K3, K4MinusE };

struct WitnessKey {
    WitnessPair pair = WitnessPair::K3;
    int n = 0;

    /// "k3k5", "k4mek4", ...
    std::string to_string() const;
    /// Directory component under the witness root: "k3-kn" or "k4me-kn".
    std::string directory() const;
    PatternSpec avoid() const;
    PatternSpec avoid_complement() const;

    bool operator==(const WitnessKey&) const = default;
};

/// Parses "k3k<n>" or "k4mek<n>"; nullopt when the text is not a key.
std::optional<WitnessKey> parse_witness_key(std::string_view text);

enum class Provenance { Bundled, File, Search };

class WitnessRecord {
public:
    WitnessRecord(std::string id, Graph graph, PatternSpec avoid_red, PatternSpec avoid_blue_in_complement,
                  Provenance provenance, std::string source = {});

    const std::string& id() const noexcept { return id_; }
    const Graph& graph() const noexcept { return graph_; }
    const PatternSpec& avoid_red() const noexcept { return avoid_red_; }
    const PatternSpec& avoid_blue_in_complement() const noexcept { return avoid_blue_; }
    Provenance provenance() const noexcept { return provenance_; }
    /// File path, or "seed=<s> budget=<b>" for searched witnesses.
    const std::string& source() const noexcept { return source_; }
    bool verified() const noexcept { return verified_; }

private:
    friend WitnessRecord verify_witness(WitnessRecord record);

    std::string id_;
    Graph graph_;
    PatternSpec avoid_red_;
    PatternSpec avoid_blue_;
    Provenance provenance_;
    std::string source_;
    bool verified_ = false;
};

/// Runs both detector checks. On success returns the record with verified()
/// set; otherwise throws PreconditionError describing the failed side.
WitnessRecord verify_witness(WitnessRecord record);

/// Decodes the first non-empty, non-comment line of a graph6 file body.
Graph load_graph6(std::string_view text);
Graph load_graph6_file(const std::filesystem::path& path);

/// Default on-disk witness root (witnesses/<pair>/<n>.g6).
std::filesystem::path default_witness_dir();

/// Registry lookup: the built-in circulants for k3k5 / k3k6, otherwise
/// <root>/<pair>/<n>.g6. Every returned record has been verified. Unknown keys
/// throw PreconditionError("no bundled witness ...").
WitnessRecord bundled_witness(const WitnessKey& key, const std::filesystem::path& root = default_witness_dir());

/// Keys for which a graph is available (built-in or present on disk).
std::vector<WitnessKey> available_witnesses(const std::filesystem::path& root = default_witness_dir());

struct TabuOptions {
    std::size_t order = 0;
    PatternSpec avoid;
    PatternSpec avoid_complement;
    std::uint64_t budget = 100000;  ///< maximum number of edge flips
    std::uint64_t seed = 1;
    std::size_t order_cap = 64;
};

/// Tabu search over graphs on `order` vertices for one that avoids `avoid`
/// with a complement avoiding `avoid_complement`. Moves flip a single vertex
/// pair taken from a currently violated embedding; recently flipped pairs are
/// tabu. Deterministic for a given seed. The result is always re-verified by
/// the detectors before it is returned; nullopt means the budget ran out.
std::optional<Graph> tabu_search_witness(const TabuOptions& options);

} // namespace ramsey
