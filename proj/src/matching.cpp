#include "ramsey/matching.hpp"

#include <queue>

namespace ramsey {

namespace {

constexpr int kNone = -1;

// Augmenting-path search with blossom contraction. Vertex bases track the
// contracted blossom each vertex currently belongs to.
class Blossom {
public:
    explicit Blossom(const Graph& g)
        : g_(g), n_(static_cast<int>(g.order())), mate_(g.order(), kNone), parent_(g.order()),
          base_(g.order()), in_queue_(g.order()), in_blossom_(g.order()) {}

    std::vector<int> solve() {
        greedy_start();
        for (int root = 0; root < n_; ++root) {
            if (mate_[root] != kNone) {
                continue;
            }
            const int end = find_augmenting_path(root);
            for (int v = end; v != kNone;) {
                const int pv = parent_[v];
                const int next = mate_[pv];
                mate_[v] = pv;
                mate_[pv] = v;
                v = next;
            }
        }
        return mate_;
    }

private:
    void greedy_start() {
        for (int u = 0; u < n_; ++u) {
            if (mate_[u] != kNone) {
                continue;
            }
            for (int v = u + 1; v < n_; ++v) {
                if (mate_[v] == kNone && g_.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
                    mate_[u] = v;
                    mate_[v] = u;
                    break;
                }
            }
        }
    }

    int lowest_common_base(int a, int b) {
        std::vector<bool> on_path(static_cast<std::size_t>(n_), false);
        while (true) {
            a = base_[a];
            on_path[a] = true;
            if (mate_[a] == kNone) {
                break;
            }
            a = parent_[mate_[a]];
        }
        while (true) {
            b = base_[b];
            if (on_path[b]) {
                return b;
            }
            b = parent_[mate_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = true;
            in_blossom_[base_[mate_[v]]] = true;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(parent_.begin(), parent_.end(), kNone);
        std::fill(in_queue_.begin(), in_queue_.end(), false);
        for (int i = 0; i < n_; ++i) {
            base_[i] = i;
        }
        std::queue<int> queue;
        queue.push(root);
        in_queue_[root] = true;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop();
            int found = kNone;
            g_.neighbors(static_cast<Vertex>(v)).for_each([&](Vertex uu) {
                const int u = static_cast<int>(uu);
                if (found != kNone || base_[v] == base_[u] || mate_[v] == u) {
                    return;
                }
                if (u == root || (mate_[u] != kNone && parent_[mate_[u]] != kNone)) {
                    const int b = lowest_common_base(v, u);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, b, u);
                    mark_path(u, b, v);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom_[base_[i]]) {
                            base_[i] = b;
                            if (!in_queue_[i]) {
                                in_queue_[i] = true;
                                queue.push(i);
                            }
                        }
                    }
                } else if (parent_[u] == kNone) {
                    parent_[u] = v;
                    if (mate_[u] == kNone) {
                        found = u;
                        return;
                    }
                    in_queue_[mate_[u]] = true;
                    queue.push(mate_[u]);
                }
            });
            if (found != kNone) {
                return found;
            }
        }
        return kNone;
    }

    const Graph& g_;
    int n_;
    std::vector<int> mate_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<bool> in_queue_;
    std::vector<bool> in_blossom_;
};

} // namespace

std::vector<Edge> maximum_matching(const Graph& g) {
    const auto mate = Blossom(g).solve();
    std::vector<Edge> out;
    for (std::size_t u = 0; u < mate.size(); ++u) {
        if (mate[u] != kNone && static_cast<std::size_t>(mate[u]) > u) {
            out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(mate[u]));
        }
    }
    return out;
}

std::size_t matching_number(const Graph& g) { return maximum_matching(g).size(); }

} // namespace ramsey
