#include "ramsey/witnesses.hpp"

#include "ramsey/detectors.hpp"
#include "ramsey/error.hpp"
#include "ramsey/graph6.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ramsey {

std::string WitnessKey::to_string() const {
    return (pair == WitnessPair::K3 ? "k3k" : "k4mek") + std::to_string(n);
}

std::string WitnessKey::directory() const { return pair == WitnessPair::K3 ? "k3-kn" : "k4me-kn"; }

PatternSpec WitnessKey::avoid() const {
    return pair == WitnessPair::K3 ? PatternSpec::clique(3) : PatternSpec::k4_minus_e();
}

PatternSpec WitnessKey::avoid_complement() const { return PatternSpec::clique(static_cast<std::size_t>(n)); }

std::optional<WitnessKey> parse_witness_key(std::string_view text) {
    WitnessKey key;
    if (text.starts_with("k4mek")) {
        key.pair = WitnessPair::K4MinusE;
        text.remove_prefix(5);
    } else if (text.starts_with("k3k")) {
        key.pair = WitnessPair::K3;
        text.remove_prefix(3);
    } else {
        return std::nullopt;
    }
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), key.n);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || key.n < 1) {
        return std::nullopt;
    }
    return key;
}

WitnessRecord::WitnessRecord(std::string id, Graph graph, PatternSpec avoid_red, PatternSpec avoid_blue_in_complement,
                             Provenance provenance, std::string source)
    : id_(std::move(id)), graph_(std::move(graph)), avoid_red_(avoid_red), avoid_blue_(avoid_blue_in_complement),
      provenance_(provenance), source_(std::move(source)) {}

WitnessRecord verify_witness(WitnessRecord record) {
    if (contains_pattern(record.graph_, record.avoid_red_)) {
        throw PreconditionError("witness " + record.id_ + " contains " + to_string(record.avoid_red_));
    }
    if (contains_pattern(complement(record.graph_), record.avoid_blue_)) {
        throw PreconditionError("complement of witness " + record.id_ + " contains " + to_string(record.avoid_blue_));
    }
    record.verified_ = true;
    return record;
}

Graph load_graph6(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        return from_graph6(line);
    }
    throw ParseError("graph6: no graph found");
}

Graph load_graph6_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open graph6 file " + path.string());
    }
    std::ostringstream body;
    body << in.rdbuf();
    return load_graph6(body.str());
}

std::filesystem::path default_witness_dir() { return RAMSEY_WITNESS_DIR; }

namespace {

std::optional<Graph> builtin_witness(const WitnessKey& key) {
    if (key.pair != WitnessPair::K3) {
        return std::nullopt;
    }
    if (key.n == 5) {
        const std::array<std::size_t, 2> offsets{1, 5};
        return circulant(13, offsets);
    }
    if (key.n == 6) {
        // No circulant on 17 vertices works here (circulant(17,{1,2,4,8}) is
        // the Paley graph and has triangles); this one came from tabu search.
        return from_graph6("Po?h?TYYAiQGP@KOp@Kcc?dG");
    }
    return std::nullopt;
}

std::filesystem::path witness_path(const WitnessKey& key, const std::filesystem::path& root) {
    return root / key.directory() / (std::to_string(key.n) + ".g6");
}

} // namespace

WitnessRecord bundled_witness(const WitnessKey& key, const std::filesystem::path& root) {
    if (auto g = builtin_witness(key)) {
        return verify_witness(
            WitnessRecord(key.to_string(), std::move(*g), key.avoid(), key.avoid_complement(), Provenance::Bundled));
    }
    const auto path = witness_path(key, root);
    if (std::filesystem::exists(path)) {
        return verify_witness(WitnessRecord(key.to_string(), load_graph6_file(path), key.avoid(),
                                            key.avoid_complement(), Provenance::File, path.string()));
    }
    throw PreconditionError("no bundled witness for " + key.to_string() + "; supply file or run search");
}

std::vector<WitnessKey> available_witnesses(const std::filesystem::path& root) {
    std::vector<WitnessKey> out;
    for (auto pair : {WitnessPair::K3, WitnessPair::K4MinusE}) {
        for (int n = 1; n <= 64; ++n) {
            const WitnessKey key{pair, n};
            if (builtin_witness(key) || std::filesystem::exists(witness_path(key, root))) {
                out.push_back(key);
            }
        }
    }
    return out;
}

} // namespace ramsey
