#include "ramsey/constructions.hpp"

#include "ramsey/detectors.hpp"
#include "ramsey/error.hpp"

#include <array>
#include <charconv>
#include <string>

namespace ramsey {

namespace {

std::string join_params(std::span<const int> params) {
    std::string out;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(params[i]);
    }
    return out;
}

// Lays out named blocks back to back and records their ranges.
class Layout {
public:
    Vertex add(std::string name, std::size_t size) {
        const auto first = next_;
        blocks_.push_back({std::move(name), first, size});
        next_ += static_cast<Vertex>(size);
        return first;
    }
    const Block& operator[](std::size_t i) const { return blocks_[i]; }
    std::size_t order() const { return next_; }
    std::vector<Block> take() { return std::move(blocks_); }

private:
    std::vector<Block> blocks_;
    Vertex next_ = 0;
};

Construction finish(Family family, std::vector<int> params, std::string spec, Graph red, PatternSpec red_target,
                    PatternSpec blue_target, std::vector<Block> blocks) {
    Construction c;
    c.family = family;
    c.params = std::move(params);
    c.spec = std::move(spec);
    c.coloring = TwoColoring(std::move(red));
    c.claimed_bound = static_cast<int>(c.coloring.order()) + 1;
    c.red_target = red_target;
    c.blue_target = blue_target;
    c.blocks = std::move(blocks);
    return c;
}

// Shared skeleton of the fan and 3-mod-4 kipas colourings: a red clique on the
// first block, red between H1uH4 and H2uH3, everything else blue (apart from
// what the caller adds inside H1..H4).
void add_four_block_red_frame(GraphBuilder& b, const Layout& layout) {
    b.add_clique(layout[0].first, layout[0].size);
    for (std::size_t left : {1u, 4u}) {
        for (std::size_t right : {2u, 3u}) {
            b.add_biclique(layout[left].first, layout[left].size, layout[right].first, layout[right].size);
        }
    }
}

int sgn_wheel(int n) { return n % 4 == 3 ? 1 : -1; }

int sgn_kipas(int n) {
    if (n % 2 == 0) {
        return 0;
    }
    return n % 4 == 3 ? 1 : -1;
}

struct RegularBlock {
    std::size_t size;
    std::size_t red_degree;
};

std::array<RegularBlock, 4> kipas_3mod4_plan(int m) {
    const auto k = static_cast<std::size_t>(m / 8);
    switch (m % 8) {
    case 1:
        return {{{6 * k + 2, 4 * k + 1}, {6 * k, 4 * k - 1}, {6 * k, 4 * k - 1}, {6 * k, 4 * k + 1}}};
    case 3:
        return {{{6 * k + 2, 4 * k + 1}, {6 * k + 2, 4 * k + 1}, {6 * k + 2, 4 * k + 1}, {6 * k + 2, 4 * k + 1}}};
    case 5:
        return {{{6 * k + 4, 4 * k + 1}, {6 * k + 4, 4 * k + 3}, {6 * k + 4, 4 * k + 3}, {6 * k + 2, 4 * k + 1}}};
    default:
        return {{{6 * k + 6, 4 * k + 3}, {6 * k + 6, 4 * k + 3}, {6 * k + 4, 4 * k + 3}, {6 * k + 4, 4 * k + 3}}};
    }
}

int parse_int(std::string_view text, std::string_view what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError("malformed " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = text.find(',');
        out.push_back(text.substr(0, comma));
        if (comma == std::string_view::npos) {
            return out;
        }
        text.remove_prefix(comma + 1);
    }
}

} // namespace

std::string_view family_name(Family f) {
    switch (f) {
    case Family::FanFan:
        return "fan";
    case Family::WheelEven:
        return "wheel-even";
    case Family::KipasEven:
        return "kipas-even";
    case Family::Kipas1Mod4:
    case Family::Kipas1Mod4AltB:
        return "kipas-1mod4";
    case Family::Kipas3Mod4:
        return "kipas-3mod4";
    case Family::W5W7Blowup:
        return "w5w7";
    case Family::WheelCliqueBlowup:
        return "wc-blowup";
    }
    return "unknown";
}

Construction fan_construction(int n, int m) {
    if (m < 4 || n < m || n > (3 * m) / 2 - 2) {
        throw PreconditionError("fan:" + std::to_string(n) + "," + std::to_string(m) +
                                " requires m >= 4 and m <= n <= floor(3m/2) - 2");
    }
    const bool small_n = 4 * n <= 5 * m - 4;
    const bool even_m = m % 2 == 0;
    const int h1 = m - 1;
    const int h2 = small_n ? (even_m ? 2 * n - 3 * m / 2 + 1 : 2 * n - 3 * (m - 1) / 2) : m - 1;
    const int h3 = even_m ? m / 2 : (m - 1) / 2;
    const int h4 = even_m ? m / 2 - 1 : (m - 1) / 2;

    Layout layout;
    layout.add("K2n", static_cast<std::size_t>(2 * n));
    for (auto [name, size] : {std::pair{"H1", h1}, {"H2", h2}, {"H3", h3}, {"H4", h4}}) {
        layout.add(name, static_cast<std::size_t>(size));
    }
    GraphBuilder b(layout.order());
    add_four_block_red_frame(b, layout);
    for (std::size_t i = 1; i <= 4; ++i) {
        b.add_clique(layout[i].first, layout[i].size);
    }
    std::vector<int> params{n, m};
    auto spec = "fan:" + join_params(params);
    return finish(Family::FanFan, std::move(params), std::move(spec), std::move(b).build(),
                  PatternSpec::fan(static_cast<std::size_t>(n)), PatternSpec::fan(static_cast<std::size_t>(m)),
                  layout.take());
}

Construction wheel_even_construction(int n) {
    if (n % 2 != 0) {
        throw PreconditionError("wheel-even:" + std::to_string(n) + " requires an even n");
    }
    if (n < 6) {
        throw PreconditionError("wheel-even:" + std::to_string(n) + " requires n >= 6");
    }
    const auto block = static_cast<std::size_t>(n - 1);
    Layout layout;
    GraphBuilder b(3 * block);
    for (const char* name : {"K1", "K2", "K3"}) {
        b.add_clique(layout.add(name, block), block);
    }
    const auto target = PatternSpec::wheel(static_cast<std::size_t>(n));
    auto c = finish(Family::WheelEven, {n}, "wheel-even:" + std::to_string(n), std::move(b).build(), target, target,
                    layout.take());
    if (n < 8) {
        c.warnings.push_back("wheel-even:" + std::to_string(n) +
                             " is below the published range n >= 8; the colouring is still well defined");
    }
    return c;
}

Construction kipas_even_construction(int m) {
    if (m < 2) {
        throw PreconditionError("kipas-even:" + std::to_string(m) + " requires m >= 2");
    }
    const auto part = static_cast<std::size_t>(m);
    Layout layout;
    const auto clique = layout.add("K2m+1", 2 * part + 1);
    const auto a = layout.add("A", part);
    const auto bb = layout.add("B", part);
    const auto c = layout.add("C", part);
    GraphBuilder b(layout.order());
    b.add_clique(clique, 2 * part + 1);
    b.add_biclique(a, part, bb, part).add_biclique(a, part, c, part).add_biclique(bb, part, c, part);
    const auto target = PatternSpec::kipas(2 * part + 2);
    return finish(Family::KipasEven, {m}, "kipas-even:" + std::to_string(m), std::move(b).build(), target, target,
                  layout.take());
}

Construction kipas_1mod4_construction(int m, KipasVariant variant) {
    if (m % 2 != 0 || m < 4) {
        throw PreconditionError("kipas-1mod4:" + std::to_string(m) + " requires an even m >= 4");
    }
    const auto part = static_cast<std::size_t>(m);
    Layout layout;
    GraphBuilder b(5 * part - 2);
    Family family = Family::Kipas1Mod4;
    if (variant == KipasVariant::A) {
        b.add_clique(layout.add("K2m", 2 * part), 2 * part);
        const auto x = layout.add("A", part);
        const auto y = layout.add("B", part - 1);
        const auto z = layout.add("C", part - 1);
        b.add_biclique(x, part, y, part - 1).add_biclique(x, part, z, part - 1).add_biclique(y, part - 1, z, part - 1);
    } else {
        family = Family::Kipas1Mod4AltB;
        const auto km = layout.add("Km", part);
        const auto y = layout.add("L", part - 1);
        const auto z = layout.add("R", part - 1);
        const auto s = layout.add("S", 2 * part);
        b.add_clique(km, part);
        b.add_biclique(y, part - 1, z, part - 1);
        b.add_biclique(s, 2 * part, km, 3 * part - 2);
    }
    const auto target = PatternSpec::kipas(2 * part + 1);
    const std::string spec =
        "kipas-1mod4:" + std::to_string(m) + (variant == KipasVariant::B ? std::string(",B") : std::string(",A"));
    return finish(family, {m}, spec, std::move(b).build(), target, target, layout.take());
}

Construction kipas_3mod4_construction(int m) {
    if (m % 2 == 0 || m < 3) {
        throw PreconditionError("kipas-3mod4:" + std::to_string(m) + " requires an odd m >= 3");
    }
    const auto plan = kipas_3mod4_plan(m);
    Layout layout;
    layout.add("K2m", static_cast<std::size_t>(2 * m));
    for (std::size_t i = 0; i < plan.size(); ++i) {
        layout.add("H" + std::to_string(i + 1), plan[i].size);
    }
    GraphBuilder b(layout.order());
    add_four_block_red_frame(b, layout);
    for (std::size_t i = 0; i < plan.size(); ++i) {
        // Block orders are even, so odd degrees are always realisable.
        b.add_graph(regular_graph(plan[i].size, plan[i].red_degree), layout[i + 1].first);
    }
    const auto target = PatternSpec::kipas(static_cast<std::size_t>(2 * m + 1));
    return finish(Family::Kipas3Mod4, {m}, "kipas-3mod4:" + std::to_string(m), std::move(b).build(), target, target,
                  layout.take());
}

Graph c7_with_chords() {
    const std::array<Edge, 3> chords{{{1, 4}, {2, 5}, {3, 6}}};
    return cycle_with_chords(7, chords);
}

Construction w5w7_construction() {
    Layout layout;
    for (int v = 0; v < 7; ++v) {
        layout.add("v" + std::to_string(v + 1), 2);
    }
    return finish(Family::W5W7Blowup, {}, "w5w7", blow_up(c7_with_chords(), complete_graph(2)), PatternSpec::wheel(5),
                  PatternSpec::wheel(7), layout.take());
}

Construction wheel_clique_blowup(const Graph& witness, int wheel_kind, int n, std::string witness_ref) {
    if (wheel_kind < 5 || wheel_kind > 7) {
        throw PreconditionError("wc-blowup: wheel kind must be 5, 6 or 7, got " + std::to_string(wheel_kind));
    }
    if (n < 1) {
        throw PreconditionError("wc-blowup: clique order must be at least 1");
    }
    const auto avoid = wheel_kind == 7 ? PatternSpec::k4_minus_e() : PatternSpec::clique(3);
    const auto describe = [](const Embedding& e) {
        std::string out;
        for (auto v : e) {
            out += (out.empty() ? "" : " ") + std::to_string(v);
        }
        return out;
    };
    if (auto hit = find_pattern(witness, avoid)) {
        throw PreconditionError("wc-blowup: witness contains " + to_string(avoid) + " on vertices [" + describe(*hit) +
                                "]");
    }
    const auto blue_target = PatternSpec::clique(static_cast<std::size_t>(n));
    if (auto hit = find_clique(complement(witness), blue_target.size)) {
        throw PreconditionError("wc-blowup: witness complement contains " + to_string(blue_target) +
                                " on vertices [" + describe(*hit) + "]");
    }
    Layout layout;
    for (Vertex v = 0; v < witness.order(); ++v) {
        layout.add("w" + std::to_string(v), 2);
    }
    std::vector<int> params{static_cast<int>(witness.order()), wheel_kind, n};
    const auto spec = "wc-blowup:" + witness_ref + "," + std::to_string(wheel_kind) + "," + std::to_string(n);
    return finish(Family::WheelCliqueBlowup, std::move(params), spec, blow_up(witness, complete_graph(2)),
                  PatternSpec::wheel(static_cast<std::size_t>(wheel_kind)), blue_target, layout.take());
}

int fan_lower_bound(int n, int m) {
    if (m < 4 || n < m) {
        throw PreconditionError("fan bound requires m >= 4 and n >= m");
    }
    if (4 * n <= 5 * m - 4) {
        return 4 * n + (m + 1) / 2;
    }
    return 2 * n + 3 * m - 2;
}

int wheel_lower_bound(int n) {
    if (n < 4) {
        throw PreconditionError("wheel bound requires n >= 4");
    }
    if (n % 2 == 0) {
        return 3 * n - 2;
    }
    return (5 * n - 6 + sgn_wheel(n)) / 2;
}

int kipas_lower_bound(int n) {
    if (n < 5) {
        throw PreconditionError("kipas bound requires n >= 5");
    }
    return (5 * n - 6 + sgn_kipas(n)) / 2;
}

int predicted_lower_bound(Family family, std::span<const int> params) {
    const auto need = [&](std::size_t count) {
        if (params.size() != count) {
            throw PreconditionError(std::string(family_name(family)) + " bound expects " + std::to_string(count) +
                                    " parameter(s)");
        }
    };
    switch (family) {
    case Family::FanFan:
        need(2);
        return fan_lower_bound(params[0], params[1]);
    case Family::WheelEven:
        need(1);
        return wheel_lower_bound(params[0]);
    case Family::KipasEven:
        need(1);
        return kipas_lower_bound(2 * params[0] + 2);
    case Family::Kipas1Mod4:
    case Family::Kipas1Mod4AltB:
    case Family::Kipas3Mod4:
        need(1);
        return kipas_lower_bound(2 * params[0] + 1);
    case Family::W5W7Blowup:
        return 15;
    case Family::WheelCliqueBlowup:
        if (params.empty()) {
            throw PreconditionError("wc-blowup bound expects the witness order");
        }
        return 2 * params[0] + 1;
    }
    return 0;
}

Construction build_from_spec(std::string_view spec, const WitnessResolver& resolve) {
    const auto colon = spec.find(':');
    const auto name = spec.substr(0, colon);
    const auto args = colon == std::string_view::npos ? std::vector<std::string_view>{} : split_commas(spec.substr(colon + 1));
    const auto expect = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi) {
            throw ParseError("family '" + std::string(spec) + "' has the wrong number of parameters");
        }
    };
    if (name == "fan") {
        expect(2, 2);
        return fan_construction(parse_int(args[0], "n"), parse_int(args[1], "m"));
    }
    if (name == "wheel-even") {
        expect(1, 1);
        return wheel_even_construction(parse_int(args[0], "n"));
    }
    if (name == "kipas-even") {
        expect(1, 1);
        return kipas_even_construction(parse_int(args[0], "m"));
    }
    if (name == "kipas-1mod4") {
        expect(1, 2);
        auto variant = KipasVariant::A;
        if (args.size() == 2) {
            if (args[1] == "B" || args[1] == "b") {
                variant = KipasVariant::B;
            } else if (args[1] != "A" && args[1] != "a") {
                throw ParseError("kipas-1mod4 variant must be A or B");
            }
        }
        return kipas_1mod4_construction(parse_int(args[0], "m"), variant);
    }
    if (name == "kipas-3mod4") {
        expect(1, 1);
        return kipas_3mod4_construction(parse_int(args[0], "m"));
    }
    if (name == "w5w7") {
        expect(0, 0);
        return w5w7_construction();
    }
    if (name == "wc-blowup") {
        expect(3, 3);
        if (!resolve) {
            throw PreconditionError("wc-blowup needs a witness resolver");
        }
        const auto ref = std::string(args[0]);
        return wheel_clique_blowup(resolve(ref), parse_int(args[1], "wheel kind"), parse_int(args[2], "n"), ref);
    }
    throw ParseError("unknown construction family '" + std::string(name) + "'");
}

} // namespace ramsey
