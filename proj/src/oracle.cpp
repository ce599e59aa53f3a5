#include "ramsey/oracle.hpp"

#include "ramsey/error.hpp"

#include <string>
#include <vector>

namespace ramsey::oracle {

namespace {

using Subset = std::vector<Vertex>;

bool adj(const Graph& g, Vertex a, Vertex b) { return g.adjacent(a, b); }

// Tries every ordering of `rest` appended to `prefix`, rejecting an ordering as
// soon as two consecutive entries are non-adjacent. With `closed`, the last
// entry must also meet the first.
bool some_ordering(const Graph& g, Subset& prefix, std::vector<bool>& taken, const Subset& rest, bool closed) {
    if (prefix.size() == rest.size()) {
        return !closed || prefix.size() < 3 || adj(g, prefix.back(), prefix.front());
    }
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (taken[i]) {
            continue;
        }
        if (!prefix.empty() && !adj(g, prefix.back(), rest[i])) {
            continue;
        }
        taken[i] = true;
        prefix.push_back(rest[i]);
        const bool ok = some_ordering(g, prefix, taken, rest, closed);
        prefix.pop_back();
        taken[i] = false;
        if (ok) {
            return true;
        }
    }
    return false;
}

bool has_hamiltonian_path(const Graph& g, const Subset& s) {
    Subset prefix;
    std::vector<bool> taken(s.size(), false);
    return some_ordering(g, prefix, taken, s, false);
}

bool has_hamiltonian_cycle(const Graph& g, const Subset& s) {
    if (s.size() < 3) {
        return false;
    }
    // Rotations are equivalent; pin the first entry.
    Subset prefix{s.front()};
    std::vector<bool> taken(s.size(), false);
    taken[0] = true;
    return some_ordering(g, prefix, taken, s, true);
}

// Pairs the first unpaired vertex with each adjacent later vertex in turn.
bool has_perfect_pairing(const Graph& g, const Subset& s, std::vector<bool>& paired) {
    std::size_t first = 0;
    while (first < s.size() && paired[first]) {
        ++first;
    }
    if (first == s.size()) {
        return true;
    }
    paired[first] = true;
    for (std::size_t j = first + 1; j < s.size(); ++j) {
        if (!paired[j] && adj(g, s[first], s[j])) {
            paired[j] = true;
            if (has_perfect_pairing(g, s, paired)) {
                return true;
            }
            paired[j] = false;
        }
    }
    paired[first] = false;
    return false;
}

bool has_perfect_pairing(const Graph& g, const Subset& s) {
    if (s.size() % 2 != 0) {
        return false;
    }
    std::vector<bool> paired(s.size(), false);
    return has_perfect_pairing(g, s, paired);
}

template <class RimTest>
bool some_hub(const Graph& g, const Subset& s, RimTest&& rim_ok) {
    for (std::size_t h = 0; h < s.size(); ++h) {
        Subset rim;
        bool joined = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i == h) {
                continue;
            }
            if (!adj(g, s[h], s[i])) {
                joined = false;
                break;
            }
            rim.push_back(s[i]);
        }
        if (joined && rim_ok(rim)) {
            return true;
        }
    }
    return false;
}

// Does the subset s host the pattern spanning all of its vertices?
bool hosts(const Graph& g, const PatternSpec& p, const Subset& s) {
    switch (p.kind) {
    case PatternKind::Clique:
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                if (!adj(g, s[i], s[j])) {
                    return false;
                }
            }
        }
        return true;
    case PatternKind::K4MinusE: {
        int edges = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                edges += adj(g, s[i], s[j]) ? 1 : 0;
            }
        }
        return edges >= 5;
    }
    case PatternKind::Cycle:
        return has_hamiltonian_cycle(g, s);
    case PatternKind::Path:
        return has_hamiltonian_path(g, s);
    case PatternKind::Matching:
        return has_perfect_pairing(g, s);
    case PatternKind::Wheel:
        return some_hub(g, s, [&](const Subset& rim) { return has_hamiltonian_cycle(g, rim); });
    case PatternKind::Kipas:
        return some_hub(g, s, [&](const Subset& rim) { return has_hamiltonian_path(g, rim); });
    case PatternKind::Fan:
        return some_hub(g, s, [&](const Subset& rim) { return has_perfect_pairing(g, rim); });
    }
    return false;
}

bool some_subset(const Graph& g, const PatternSpec& p, Subset& chosen, Vertex next, std::size_t want) {
    if (chosen.size() == want) {
        return hosts(g, p, chosen);
    }
    for (Vertex v = next; v < g.order(); ++v) {
        if (g.order() - v < want - chosen.size()) {
            break;
        }
        chosen.push_back(v);
        const bool ok = some_subset(g, p, chosen, v + 1, want);
        chosen.pop_back();
        if (ok) {
            return true;
        }
    }
    return false;
}

void best_matching(const std::vector<Edge>& edges, std::size_t index, std::vector<bool>& used, std::size_t size,
                   std::size_t& best) {
    if (size > best) {
        best = size;
    }
    // Even a perfect matching of the untouched vertices cannot beat `best`.
    if (index == edges.size() || size + (used.size() - 2 * size) / 2 <= best) {
        return;
    }
    const auto [u, v] = edges[index];
    if (!used[u] && !used[v]) {
        used[u] = used[v] = true;
        best_matching(edges, index + 1, used, size + 1, best);
        used[u] = used[v] = false;
    }
    best_matching(edges, index + 1, used, size, best);
}

} // namespace

bool oracle_contains(const Graph& g, const PatternSpec& p) {
    if (g.order() > kMaxContainsOrder) {
        throw PreconditionError("oracle_contains supports at most " + std::to_string(kMaxContainsOrder) +
                                " vertices, got " + std::to_string(g.order()));
    }
    validate(p);
    const auto want = p.order();
    if (want > g.order()) {
        return false;
    }
    Subset chosen;
    return some_subset(g, p, chosen, 0, want);
}

std::size_t oracle_matching_number(const Graph& g) {
    if (g.order() > kMaxMatchingOrder) {
        throw PreconditionError("oracle_matching_number supports at most " + std::to_string(kMaxMatchingOrder) +
                                " vertices, got " + std::to_string(g.order()));
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (g.adjacent(u, v)) {
                edges.emplace_back(u, v);
            }
        }
    }
    std::vector<bool> used(g.order(), false);
    std::size_t best = 0;
    best_matching(edges, 0, used, 0, best);
    return best;
}

} // namespace ramsey::oracle
