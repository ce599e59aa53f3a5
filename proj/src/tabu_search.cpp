#include "ramsey/detectors.hpp"
#include "ramsey/error.hpp"
#include "ramsey/witnesses.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace ramsey {

namespace {

constexpr std::size_t kCountCap = 4096;
constexpr std::size_t kPackingCap = 32;
constexpr std::size_t kSampledEmbeddings = 2;
constexpr std::uint64_t kStallLimit = 4000;

// Violations of `p` in g. Cliques and diamonds are counted exactly (capped);
// other kinds use a greedy packing: find an embedding, delete one of its
// edges, repeat.
std::size_t violation_count(const Graph& g, const PatternSpec& p) {
    if (p.order() > g.order()) {
        return 0;
    }
    switch (p.kind) {
    case PatternKind::Clique:
        return count_cliques(g, p.size, kCountCap);
    case PatternKind::K4MinusE: {
        std::size_t total = 0;
        for (auto [u, v] : g.edges()) {
            const auto common = (g.neighbors(u) & g.neighbors(v)).count();
            total += common * (common - (common > 0 ? 1 : 0)) / 2;
        }
        return total;
    }
    default:
        break;
    }
    const auto shape = pattern_graph(p).edges();
    if (shape.empty()) {
        return contains_pattern(g, p) ? 1 : 0;
    }
    GraphBuilder work(g.order());
    work.add_graph(g, 0);
    std::size_t found = 0;
    while (found < kPackingCap) {
        const auto e = find_pattern(work.snapshot(), p);
        if (!e) {
            break;
        }
        ++found;
        work.remove_edge((*e)[shape.front().first], (*e)[shape.front().second]);
    }
    return found;
}

// A few violated embeddings, found on successively thinned copies of g.
std::vector<Embedding> sample_violations(const Graph& g, const PatternSpec& p, std::mt19937_64& rng) {
    std::vector<Embedding> out;
    if (p.order() > g.order()) {
        return out;
    }
    const auto shape = pattern_graph(p).edges();
    GraphBuilder work(g.order());
    work.add_graph(g, 0);
    while (out.size() < kSampledEmbeddings) {
        auto e = find_pattern(work.snapshot(), p);
        if (!e) {
            break;
        }
        if (shape.empty()) {
            out.push_back(std::move(*e));
            break;
        }
        const auto [i, j] = shape[std::uniform_int_distribution<std::size_t>(0, shape.size() - 1)(rng)];
        work.remove_edge((*e)[i], (*e)[j]);
        out.push_back(std::move(*e));
    }
    return out;
}

class TabuSearch {
public:
    explicit TabuSearch(const TabuOptions& o)
        : options_(o), rng_(o.seed), n_(o.order), red_(o.order), tabu_until_(o.order * o.order, 0) {}

    std::optional<Graph> run() {
        randomize();
        auto score = objective();
        auto best_score = score;
        std::uint64_t last_improvement = 0;
        for (std::uint64_t step = 0;; ++step) {
            if (score == 0) {
                auto g = red_.snapshot();
                if (!contains_pattern(g, options_.avoid) &&
                    !contains_pattern(complement(g), options_.avoid_complement)) {
                    return g;
                }
            }
            if (step >= options_.budget) {
                return std::nullopt;
            }
            if (step - last_improvement > kStallLimit) {
                randomize();
                score = objective();
                best_score = score;
                last_improvement = step;
                continue;
            }
            const auto moves = candidate_moves();
            if (moves.empty()) {
                // Violations exist but have no edges (e.g. clique:1); nothing to flip.
                return std::nullopt;
            }
            Edge chosen = moves.front();
            std::size_t chosen_score = 0;
            std::size_t ties = 0;
            bool have = false;
            for (auto move : moves) {
                flip(move);
                const auto s = objective();
                flip(move);
                const bool allowed = tabu_until_[index(move)] <= step || s < best_score;
                if (!allowed) {
                    continue;
                }
                if (!have || s < chosen_score) {
                    chosen = move;
                    chosen_score = s;
                    ties = 1;
                    have = true;
                } else if (s == chosen_score &&
                           std::uniform_int_distribution<std::size_t>(0, ties++)(rng_) == 0) {
                    chosen = move;
                }
            }
            if (!have) {
                chosen = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng_)];
                flip(chosen);
                chosen_score = objective();
            } else {
                flip(chosen);
            }
            score = chosen_score;
            tabu_until_[index(chosen)] = step + 1 + tenure();
            if (score < best_score) {
                best_score = score;
                last_improvement = step;
            }
        }
    }

private:
    std::size_t index(Edge e) const { return e.first * n_ + e.second; }

    std::uint64_t tenure() {
        return 3 + std::uniform_int_distribution<std::uint64_t>(0, n_)(rng_);
    }

    void randomize() {
        red_ = GraphBuilder(n_);
        std::bernoulli_distribution coin(0.5);
        for (Vertex u = 0; u < n_; ++u) {
            for (Vertex v = u + 1; v < n_; ++v) {
                if (coin(rng_)) {
                    red_.add_edge(u, v);
                }
            }
        }
        std::fill(tabu_until_.begin(), tabu_until_.end(), 0);
    }

    void flip(Edge e) {
        if (red_.has_edge(e.first, e.second)) {
            red_.remove_edge(e.first, e.second);
        } else {
            red_.add_edge(e.first, e.second);
        }
    }

    std::size_t objective() const {
        const auto g = red_.snapshot();
        return violation_count(g, options_.avoid) + violation_count(complement(g), options_.avoid_complement);
    }

    std::vector<Edge> candidate_moves() {
        const auto g = red_.snapshot();
        std::vector<Edge> moves;
        const auto collect = [&](const Graph& side, const PatternSpec& p) {
            const auto shape = pattern_graph(p).edges();
            for (const auto& e : sample_violations(side, p, rng_)) {
                for (auto [i, j] : shape) {
                    moves.emplace_back(std::min(e[i], e[j]), std::max(e[i], e[j]));
                }
            }
        };
        collect(g, options_.avoid);
        collect(complement(g), options_.avoid_complement);
        std::sort(moves.begin(), moves.end());
        moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
        return moves;
    }

    TabuOptions options_;
    std::mt19937_64 rng_;
    std::size_t n_;
    GraphBuilder red_;
    std::vector<std::uint64_t> tabu_until_;
};

} // namespace

std::optional<Graph> tabu_search_witness(const TabuOptions& options) {
    if (options.order > options.order_cap) {
        throw PreconditionError("search order " + std::to_string(options.order) + " exceeds the cap of " +
                                std::to_string(options.order_cap));
    }
    validate(options.avoid);
    validate(options.avoid_complement);
    return TabuSearch(options).run();
}

} // namespace ramsey
