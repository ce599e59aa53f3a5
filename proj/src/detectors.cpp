#include "ramsey/detectors.hpp"

#include "ramsey/error.hpp"
#include "ramsey/matching.hpp"

#include <algorithm>

namespace ramsey {

namespace {

// ---- shared pruning helpers ------------------------------------------------

// Vertices of `allowed` reachable from `seeds` (seeds restricted to allowed).
VertexSet reachable(const Graph& g, const VertexSet& allowed, const VertexSet& seeds) {
    VertexSet reach = seeds & allowed;
    VertexSet frontier = reach;
    while (!frontier.empty()) {
        VertexSet next(g.order());
        frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
        next &= allowed;
        next -= reach;
        reach |= next;
        frontier = std::move(next);
    }
    return reach;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& allowed) {
    std::vector<VertexSet> out;
    VertexSet left = allowed;
    for (Vertex v = left.first(); v != VertexSet::npos; v = left.first()) {
        VertexSet seed(g.order());
        seed.set(v);
        auto comp = reachable(g, left, seed);
        left -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

// Size of a greedily built (minimum-degree-first) independent set in `region`.
std::size_t greedy_independent_size(const Graph& g, const VertexSet& region) {
    VertexSet left = region;
    std::size_t size = 0;
    while (!left.empty()) {
        Vertex best = VertexSet::npos;
        std::size_t best_degree = 0;
        left.for_each([&](Vertex v) {
            const auto d = g.neighbors(v).intersection_count(left);
            if (best == VertexSet::npos || d < best_degree) {
                best = v;
                best_degree = d;
            }
        });
        ++size;
        left -= g.neighbors(best);
        left.reset(best);
    }
    return size;
}

// Any path alternates at worst between an independent set I and the rest, so
// it has at most 2|R \ I| + 1 vertices.
std::size_t path_order_bound(const Graph& g, const VertexSet& region) {
    const auto total = region.count();
    const auto independent = greedy_independent_size(g, region);
    return std::min(total, 2 * (total - independent) + 1);
}

std::size_t cycle_length_bound(const Graph& g, const VertexSet& region) {
    const auto total = region.count();
    const auto independent = greedy_independent_size(g, region);
    return std::min(total, 2 * (total - independent));
}

bool is_bipartite(const Graph& g, const VertexSet& component) {
    const auto root = component.first();
    if (root == VertexSet::npos) {
        return true;
    }
    VertexSet side_a(g.order());
    VertexSet side_b(g.order());
    side_a.set(root);
    VertexSet frontier = side_a;
    bool on_a = true;
    while (!frontier.empty()) {
        VertexSet next(g.order());
        frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
        next &= component;
        auto& same = on_a ? side_a : side_b;
        auto& other = on_a ? side_b : side_a;
        if (next.intersects(same)) {
            return false;
        }
        next -= other;
        other |= next;
        frontier = std::move(next);
        on_a = !on_a;
    }
    return true;
}

// Candidates ordered by ascending degree inside `free`: tight vertices first.
std::vector<Vertex> ordered_candidates(const Graph& g, const VertexSet& candidates, const VertexSet& free) {
    auto out = candidates.to_vector();
    std::vector<std::size_t> degree(g.order(), 0);
    for (auto v : out) {
        degree[v] = g.neighbors(v).intersection_count(free);
    }
    std::stable_sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return degree[a] < degree[b]; });
    return out;
}

// ---- clique ----------------------------------------------------------------

class CliqueSearch {
public:
    CliqueSearch(const Graph& g, std::size_t k) : g_(g), k_(k) {}

    std::optional<Embedding> run() {
        if (expand(VertexSet::full(g_.order()))) {
            return current_;
        }
        return std::nullopt;
    }

private:
    bool expand(VertexSet candidates) {
        if (current_.size() == k_) {
            return true;
        }
        if (current_.size() + candidates.count() < k_) {
            return false;
        }
        std::vector<Vertex> order;
        std::vector<std::size_t> colour;
        colour_sort(candidates, order, colour);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current_.size() + colour[i] < k_) {
                return false;
            }
            const auto v = order[i];
            current_.push_back(v);
            if (expand(candidates & g_.neighbors(v))) {
                return true;
            }
            current_.pop_back();
            candidates.reset(v);
        }
        return false;
    }

    // Sequential greedy colouring; colours are non-decreasing along `order`.
    void colour_sort(const VertexSet& candidates, std::vector<Vertex>& order, std::vector<std::size_t>& colour) const {
        VertexSet uncoloured = candidates;
        std::size_t c = 0;
        while (!uncoloured.empty()) {
            ++c;
            VertexSet q = uncoloured;
            for (Vertex v = q.first(); v != VertexSet::npos; v = q.first()) {
                q.reset(v);
                q -= g_.neighbors(v);
                uncoloured.reset(v);
                order.push_back(v);
                colour.push_back(c);
            }
        }
    }

    const Graph& g_;
    std::size_t k_;
    Embedding current_;
};

std::size_t count_cliques_from(const Graph& g, VertexSet candidates, std::size_t depth, std::size_t k,
                               std::size_t cap, std::size_t found) {
    if (depth == k) {
        return found + 1;
    }
    for (Vertex v = candidates.first(); v != VertexSet::npos && found < cap; v = candidates.first()) {
        if (depth + candidates.count() < k) {
            break;
        }
        candidates.reset(v);
        found = count_cliques_from(g, candidates & g.neighbors(v), depth + 1, k, cap, found);
    }
    return found;
}

// ---- paths and cycles ------------------------------------------------------

class PathSearch {
public:
    PathSearch(const Graph& g, std::size_t target) : g_(g), target_(target) {}

    std::optional<Embedding> run() {
        if (target_ == 0 || target_ > g_.order()) {
            return std::nullopt;
        }
        for (const auto& comp : components(g_, VertexSet::full(g_.order()))) {
            if (comp.count() < target_ || path_order_bound(g_, comp) < target_) {
                continue;
            }
            for (auto s : ordered_candidates(g_, comp, comp)) {
                free_ = comp;
                free_.reset(s);
                path_.assign(1, s);
                if (extend()) {
                    return path_;
                }
            }
        }
        return std::nullopt;
    }

private:
    bool extend() {
        if (path_.size() == target_) {
            return true;
        }
        const auto remaining = target_ - path_.size();
        const auto next = g_.neighbors(path_.back()) & free_;
        if (next.empty()) {
            return false;
        }
        if (remaining > 1) {
            const auto reach = reachable(g_, free_, next);
            if (reach.count() < remaining || path_order_bound(g_, reach) < remaining) {
                return false;
            }
        }
        for (auto v : ordered_candidates(g_, next, free_)) {
            path_.push_back(v);
            free_.reset(v);
            if (extend()) {
                return true;
            }
            free_.set(v);
            path_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    std::size_t target_;
    VertexSet free_;
    Embedding path_;
};

// The cycle's minimum-index vertex is fixed as its start, so each cycle is
// explored only from one anchor.
class CycleSearch {
public:
    CycleSearch(const Graph& g, std::size_t length) : g_(g), length_(length) {}

    std::optional<Embedding> run() {
        if (length_ < 3 || length_ > g_.order()) {
            return std::nullopt;
        }
        for (const auto& comp : components(g_, VertexSet::full(g_.order()))) {
            if (comp.count() < length_) {
                continue;
            }
            if ((length_ % 2 == 1 && is_bipartite(g_, comp)) || cycle_length_bound(g_, comp) < length_) {
                continue;
            }
            for (Vertex s = comp.first(); s != VertexSet::npos; s = comp.next_from(s + 1)) {
                const auto above = comp - VertexSet::range(g_.order(), 0, s + 1);
                VertexSet seed(g_.order());
                seed.set(s);
                VertexSet with_start = above;
                with_start.set(s);
                if (reachable(g_, with_start, seed).count() < length_) {
                    continue;
                }
                start_ = s;
                free_ = above;
                path_.assign(1, s);
                if (extend()) {
                    return path_;
                }
            }
        }
        return std::nullopt;
    }

private:
    bool extend() {
        const auto end = path_.back();
        if (path_.size() == length_) {
            return g_.adjacent(end, start_);
        }
        const auto remaining = length_ - path_.size();
        auto next = g_.neighbors(end) & free_;
        if (remaining == 1) {
            next &= g_.neighbors(start_);
        }
        if (next.empty()) {
            return false;
        }
        if (remaining > 1) {
            const auto reach = reachable(g_, free_, next);
            if (reach.count() < remaining || !reach.intersects(g_.neighbors(start_)) ||
                path_order_bound(g_, reach) < remaining) {
                return false;
            }
        }
        for (auto v : ordered_candidates(g_, next, free_)) {
            path_.push_back(v);
            free_.reset(v);
            if (extend()) {
                return true;
            }
            free_.set(v);
            path_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    std::size_t length_;
    Vertex start_ = 0;
    VertexSet free_;
    Embedding path_;
};

// ---- centred patterns ------------------------------------------------------

template <class RimSearch>
std::optional<Embedding> find_centred(const Graph& g, std::size_t rim_order, RimSearch&& search) {
    for (Vertex hub = 0; hub < g.order(); ++hub) {
        if (g.degree(hub) < rim_order) {
            continue;
        }
        const auto rim_vertices = g.neighbors(hub).to_vector();
        const auto local = induced(g, std::span<const Vertex>(rim_vertices));
        if (auto rim = search(local)) {
            Embedding e{hub};
            for (auto v : *rim) {
                e.push_back(rim_vertices[v]);
            }
            return e;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Embedding> find_clique(const Graph& g, std::size_t k) {
    if (k == 0) {
        throw PreconditionError("clique size must be at least 1");
    }
    if (k > g.order()) {
        return std::nullopt;
    }
    return CliqueSearch(g, k).run();
}

bool has_clique(const Graph& g, std::size_t k) { return find_clique(g, k).has_value(); }

std::size_t count_cliques(const Graph& g, std::size_t k, std::size_t cap) {
    if (k == 0) {
        return 1;
    }
    return count_cliques_from(g, VertexSet::full(g.order()), 0, k, cap, 0);
}

std::optional<Embedding> find_k4_minus_e(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        const auto common = g.neighbors(u) & g.neighbors(v);
        const auto a = common.first();
        if (a == VertexSet::npos) {
            continue;
        }
        const auto b = common.next_from(a + 1);
        if (b != VertexSet::npos) {
            return Embedding{u, v, a, b};
        }
    }
    return std::nullopt;
}

bool has_k4_minus_e(const Graph& g) { return find_k4_minus_e(g).has_value(); }

std::optional<Embedding> find_cycle_of_length(const Graph& g, std::size_t len) {
    if (len < 3) {
        throw PreconditionError("cycle length must be at least 3");
    }
    return CycleSearch(g, len).run();
}

bool has_cycle_of_length(const Graph& g, std::size_t len) { return find_cycle_of_length(g, len).has_value(); }

std::optional<Embedding> find_path_of_order(const Graph& g, std::size_t order) {
    if (order < 1) {
        throw PreconditionError("path order must be at least 1");
    }
    return PathSearch(g, order).run();
}

bool has_path_of_order(const Graph& g, std::size_t order) { return find_path_of_order(g, order).has_value(); }

std::optional<Embedding> find_matching(const Graph& g, std::size_t n) {
    const auto m = maximum_matching(g);
    if (m.size() < n) {
        return std::nullopt;
    }
    Embedding e;
    for (std::size_t i = 0; i < n; ++i) {
        e.push_back(m[i].first);
        e.push_back(m[i].second);
    }
    return e;
}

std::optional<Embedding> find_pattern(const Graph& g, const PatternSpec& p) {
    validate(p);
    switch (p.kind) {
    case PatternKind::Fan:
        return find_centred(g, 2 * p.size, [&](const Graph& local) { return find_matching(local, p.size); });
    case PatternKind::Wheel:
        return find_centred(g, p.size - 1, [&](const Graph& local) { return find_cycle_of_length(local, p.size - 1); });
    case PatternKind::Kipas:
        return find_centred(g, p.size - 1, [&](const Graph& local) { return find_path_of_order(local, p.size - 1); });
    case PatternKind::Clique:
        return find_clique(g, p.size);
    case PatternKind::Cycle:
        return find_cycle_of_length(g, p.size);
    case PatternKind::Path:
        return find_path_of_order(g, p.size);
    case PatternKind::Matching:
        return find_matching(g, p.size);
    case PatternKind::K4MinusE:
        return find_k4_minus_e(g);
    }
    return std::nullopt;
}

bool contains_pattern(const Graph& g, const PatternSpec& p) { return find_pattern(g, p).has_value(); }

} // namespace ramsey
