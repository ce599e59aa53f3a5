#include "ramsey/certify.hpp"

#include "ramsey/detectors.hpp"
#include "ramsey/error.hpp"
#include "ramsey/rbc.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <memory>
#include <stdexcept>

namespace ramsey {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t millis_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Certificate skeleton(const TwoColoring& coloring, const PatternSpec& red_target,
                     const std::optional<PatternSpec>& blue_target, ConstructionDescriptor descriptor) {
    Certificate cert;
    cert.construction = std::move(descriptor);
    cert.order = coloring.order();
    cert.red_target = red_target;
    cert.blue_target = blue_target;
    cert.coloring_sha = coloring_sha256(coloring);
    cert.detector_version = kDetectorVersion;
    return cert;
}

// Red first; the first embedding found settles the verdict.
void decide(Certificate& cert, const TwoColoring& coloring) {
    const auto start = Clock::now();
    cert.result = Verdict::Verified;
    if (auto e = find_pattern(coloring.red(), cert.red_target)) {
        cert.result = Verdict::Refuted;
        cert.counterexample = Counterexample{Color::Red, std::move(*e)};
    } else if (cert.blue_target) {
        if (auto b = find_pattern(coloring.blue(), *cert.blue_target)) {
            cert.result = Verdict::Refuted;
            cert.counterexample = Counterexample{Color::Blue, std::move(*b)};
        }
    }
    cert.elapsed_ms = millis_since(start);
}

const char* verdict_name(Verdict v) { return v == Verdict::Verified ? "verified" : "refuted"; }
const char* color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

template <class T>
T field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) {
        throw ParseError(std::string("certificate: missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate: field '") + key + "': " + e.what());
    }
}

} // namespace

ConstructionDescriptor ConstructionDescriptor::from(const Construction& c) {
    ConstructionDescriptor d;
    d.family = std::string(family_name(c.family));
    d.spec = c.spec;
    d.params = c.params;
    d.claimed_bound = c.claimed_bound;
    d.blocks = c.blocks;
    return d;
}

std::string coloring_sha256(const TwoColoring& c) {
    const auto body = canonical_rbc(c);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(body.data(), body.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 digest failed");
    }
    std::string hex;
    hex.reserve(2 * length);
    for (unsigned int i = 0; i < length; ++i) {
        char buf[3];
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

Certificate verify(const TwoColoring& coloring, const PatternSpec& red_target, const PatternSpec& blue_target,
                   ConstructionDescriptor descriptor) {
    validate(red_target);
    validate(blue_target);
    auto cert = skeleton(coloring, red_target, blue_target, std::move(descriptor));
    decide(cert, coloring);
    return cert;
}

Certificate verify(const Construction& c) {
    return verify(c.coloring, c.red_target, c.blue_target, ConstructionDescriptor::from(c));
}

Certificate verify_ramsey_witness(const Graph& g, const PatternSpec& avoid,
                                  const std::optional<PatternSpec>& avoid_complement) {
    validate(avoid);
    if (avoid_complement) {
        validate(*avoid_complement);
    }
    const TwoColoring coloring(g);
    ConstructionDescriptor d;
    d.family = "ramsey-witness";
    d.params = {static_cast<int>(g.order())};
    d.claimed_bound = static_cast<int>(g.order()) + 1;
    auto cert = skeleton(coloring, avoid, avoid_complement, std::move(d));
    decide(cert, coloring);
    return cert;
}

bool certificate_consistent(const Certificate& cert, const TwoColoring& coloring) {
    if (cert.order != coloring.order() || cert.coloring_sha != coloring_sha256(coloring)) {
        return false;
    }
    if (cert.verified()) {
        return !cert.counterexample.has_value();
    }
    if (!cert.counterexample) {
        return false;
    }
    const auto& ce = *cert.counterexample;
    if (ce.color == Color::Red) {
        return is_embedding(coloring.red(), cert.red_target, ce.vertices);
    }
    return cert.blue_target && is_embedding(coloring.blue(), *cert.blue_target, ce.vertices);
}

nlohmann::json to_json(const Certificate& cert) {
    using nlohmann::json;
    json blocks = json::array();
    for (const auto& b : cert.construction.blocks) {
        blocks.push_back({{"name", b.name}, {"first", b.first}, {"size", b.size}});
    }
    json construction = {
        {"family", cert.construction.family},
        {"spec", cert.construction.spec},
        {"params", cert.construction.params},
        {"claimed_bound", cert.construction.claimed_bound ? json(*cert.construction.claimed_bound) : json(nullptr)},
        {"blocks", blocks},
    };
    json counterexample = nullptr;
    if (cert.counterexample) {
        counterexample = {{"color", color_name(cert.counterexample->color)},
                          {"vertices", cert.counterexample->vertices}};
    }
    return {
        {"construction", construction},
        {"order", cert.order},
        {"red_target", to_string(cert.red_target)},
        {"blue_target", cert.blue_target ? json(to_string(*cert.blue_target)) : json(nullptr)},
        {"result", verdict_name(cert.result)},
        {"counterexample", counterexample},
        {"coloring_sha", cert.coloring_sha},
        {"elapsed_ms", cert.elapsed_ms},
        {"detector_version", cert.detector_version},
    };
}

Certificate certificate_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw ParseError("certificate: expected a JSON object");
    }
    Certificate cert;
    const auto& c = j.contains("construction") ? j.at("construction") : throw ParseError("certificate: missing field 'construction'");
    cert.construction.family = field<std::string>(c, "family");
    cert.construction.spec = c.value("spec", std::string{});
    cert.construction.params = c.value("params", std::vector<int>{});
    if (c.contains("claimed_bound") && !c.at("claimed_bound").is_null()) {
        cert.construction.claimed_bound = field<int>(c, "claimed_bound");
    }
    if (c.contains("blocks")) {
        for (const auto& b : c.at("blocks")) {
            cert.construction.blocks.push_back(
                {field<std::string>(b, "name"), field<Vertex>(b, "first"), field<std::size_t>(b, "size")});
        }
    }
    cert.order = field<std::size_t>(j, "order");
    cert.red_target = parse_pattern(field<std::string>(j, "red_target"));
    if (!j.contains("blue_target")) {
        throw ParseError("certificate: missing field 'blue_target'");
    }
    if (!j.at("blue_target").is_null()) {
        cert.blue_target = parse_pattern(field<std::string>(j, "blue_target"));
    }
    const auto result = field<std::string>(j, "result");
    if (result == "verified") {
        cert.result = Verdict::Verified;
    } else if (result == "refuted") {
        cert.result = Verdict::Refuted;
    } else {
        throw ParseError("certificate: unknown result '" + result + "'");
    }
    if (!j.contains("counterexample")) {
        throw ParseError("certificate: missing field 'counterexample'");
    }
    if (const auto& ce = j.at("counterexample"); !ce.is_null()) {
        const auto color = field<std::string>(ce, "color");
        if (color != "red" && color != "blue") {
            throw ParseError("certificate: unknown counterexample color '" + color + "'");
        }
        cert.counterexample = Counterexample{color == "red" ? Color::Red : Color::Blue,
                                             field<std::vector<Vertex>>(ce, "vertices")};
    }
    if (cert.verified() == cert.counterexample.has_value()) {
        throw ParseError("certificate: counterexample must be present exactly when refuted");
    }
    cert.coloring_sha = field<std::string>(j, "coloring_sha");
    cert.elapsed_ms = field<std::int64_t>(j, "elapsed_ms");
    cert.detector_version = j.value("detector_version", std::string{});
    return cert;
}

// Published lower bounds; values flagged exact are known Ramsey numbers.
const std::vector<TableEntry>& k3_clique_table() {
    static const std::vector<TableEntry> table{
        {3, 6, true},   {4, 9, true},   {5, 14, true},  {6, 18, true},  {7, 23, true},
        {8, 28, true},  {9, 36, true},  {10, 40, false}, {11, 47, false}, {12, 53, false},
        {13, 60, false}, {14, 67, false}, {15, 74, false},
    };
    return table;
}

const std::vector<TableEntry>& k4me_clique_table() {
    static const std::vector<TableEntry> table{
        {3, 7, true}, {4, 11, true}, {5, 16, true}, {6, 21, true},
        {7, 28, false}, {8, 36, false}, {9, 41, false}, {10, 49, false},
    };
    return table;
}

namespace {

// Published wheel-versus-clique lower bounds, stored verbatim for diffing.
struct PublishedRow {
    const char* name;
    int first_n;
    std::vector<int> values;
};

const std::vector<PublishedRow>& published_rows() {
    static const std::vector<PublishedRow> rows{
        {"w5w6", 5, {27, 35, 45, 55, 71, 79, 93, 105, 119, 133, 147}},
        {"w7", 5, {31, 41, 55, 71, 81, 97}},
    };
    return rows;
}

int table_value(const std::vector<TableEntry>& table, int n) {
    for (const auto& e : table) {
        if (e.n == n) {
            return e.value;
        }
    }
    throw std::out_of_range("no table entry for n = " + std::to_string(n));
}

} // namespace

std::vector<TableRow> compute_tables() {
    std::vector<TableRow> out;
    for (const auto& row : published_rows()) {
        const auto& source = std::string_view(row.name) == "w7" ? k4me_clique_table() : k3_clique_table();
        TableRow r;
        r.name = row.name;
        for (std::size_t i = 0; i < row.values.size(); ++i) {
            const int n = row.first_n + static_cast<int>(i);
            r.n.push_back(n);
            r.derived.push_back(2 * table_value(source, n) - 1);
            r.published.push_back(row.values[i]);
            if (r.derived.back() != r.published.back()) {
                r.mismatched_n.push_back(n);
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<TableRow> reproduce_tables() {
    auto rows = compute_tables();
    for (const auto& r : rows) {
        if (!r.ok()) {
            throw std::runtime_error("table " + r.name + " does not match the published row");
        }
    }
    return rows;
}

} // namespace ramsey
