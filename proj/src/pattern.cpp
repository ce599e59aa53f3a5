#include "ramsey/pattern.hpp"

#include "ramsey/error.hpp"

#include <charconv>

namespace ramsey {

namespace {

struct KindName {
    PatternKind kind;
    std::string_view name;
    std::size_t min_size;
};

constexpr KindName kKinds[] = {
    {PatternKind::Fan, "fan", 1},       {PatternKind::Wheel, "wheel", 4}, {PatternKind::Kipas, "kipas", 3},
    {PatternKind::Clique, "clique", 1}, {PatternKind::Cycle, "cycle", 3}, {PatternKind::Path, "path", 1},
    {PatternKind::Matching, "matching", 1},
};

const KindName& lookup(PatternKind kind) {
    for (const auto& k : kKinds) {
        if (k.kind == kind) {
            return k;
        }
    }
    throw PreconditionError("pattern kind has no size parameter");
}

} // namespace

std::size_t PatternSpec::order() const noexcept {
    switch (kind) {
    case PatternKind::Fan:
        return 2 * size + 1;
    case PatternKind::Matching:
        return 2 * size;
    case PatternKind::K4MinusE:
        return 4;
    default:
        return size;
    }
}

void validate(const PatternSpec& p) {
    if (p.kind == PatternKind::K4MinusE) {
        return;
    }
    const auto& k = lookup(p.kind);
    if (p.size < k.min_size) {
        throw PreconditionError(std::string(k.name) + " requires size >= " + std::to_string(k.min_size) +
                                ", got " + std::to_string(p.size));
    }
}

PatternSpec parse_pattern(std::string_view text) {
    if (text == "k4me") {
        return PatternSpec::k4_minus_e();
    }
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError("pattern '" + std::string(text) + "' must look like kind:size or k4me");
    }
    const auto name = text.substr(0, colon);
    const auto digits = text.substr(colon + 1);
    std::size_t size = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), size);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
        throw ParseError("pattern '" + std::string(text) + "' has a malformed size");
    }
    for (const auto& k : kKinds) {
        if (k.name == name) {
            PatternSpec p{k.kind, size};
            try {
                validate(p);
            } catch (const PreconditionError& e) {
                throw ParseError(e.what());
            }
            return p;
        }
    }
    throw ParseError("unknown pattern kind '" + std::string(name) + "'");
}

std::string to_string(const PatternSpec& p) {
    if (p.kind == PatternKind::K4MinusE) {
        return "k4me";
    }
    return std::string(lookup(p.kind).name) + ":" + std::to_string(p.size);
}

Graph pattern_graph(const PatternSpec& p) {
    validate(p);
    const auto n = p.order();
    GraphBuilder b(n);
    const auto rim = [&](bool closed) {
        for (Vertex i = 2; i < n; ++i) {
            b.add_edge(i - 1, i);
        }
        if (closed) {
            b.add_edge(1, static_cast<Vertex>(n - 1));
        }
    };
    const auto hub = [&] {
        for (Vertex i = 1; i < n; ++i) {
            b.add_edge(0, i);
        }
    };
    switch (p.kind) {
    case PatternKind::Fan:
        hub();
        for (Vertex i = 1; i + 1 < n; i += 2) {
            b.add_edge(i, i + 1);
        }
        break;
    case PatternKind::Wheel:
        hub();
        rim(true);
        break;
    case PatternKind::Kipas:
        hub();
        rim(false);
        break;
    case PatternKind::Clique:
        b.add_clique(0, n);
        break;
    case PatternKind::Cycle:
        for (Vertex i = 0; i < n; ++i) {
            b.add_edge(i, static_cast<Vertex>((i + 1) % n));
        }
        break;
    case PatternKind::Path:
        for (Vertex i = 1; i < n; ++i) {
            b.add_edge(i - 1, i);
        }
        break;
    case PatternKind::Matching:
        for (Vertex i = 0; i + 1 < n; i += 2) {
            b.add_edge(i, i + 1);
        }
        break;
    case PatternKind::K4MinusE:
        b.add_edge(0, 1).add_edge(0, 2).add_edge(0, 3).add_edge(1, 2).add_edge(1, 3);
        break;
    }
    return std::move(b).build();
}

bool is_embedding(const Graph& g, const PatternSpec& p, std::span<const Vertex> e) {
    if (e.size() != p.order()) {
        return false;
    }
    VertexSet seen(g.order());
    for (auto v : e) {
        if (v >= g.order() || seen.test(v)) {
            return false;
        }
        seen.set(v);
    }
    const auto shape = pattern_graph(p);
    for (auto [i, j] : shape.edges()) {
        if (!g.adjacent(e[i], e[j])) {
            return false;
        }
    }
    return true;
}

} // namespace ramsey
