#include <algorithm>
#include <vector>

#include "prismatic/covering.hpp"

namespace prismatic {

namespace {

// Edmonds' blossom algorithm, O(V^3). Alternating BFS forest with blossom
// contraction tracked through base[].
class Blossom {
public:
    explicit Blossom(const Graph& g)
        : g_(g),
          n_(g.vertex_count()),
          match_(static_cast<size_t>(n_), -1),
          p_(static_cast<size_t>(n_), -1),
          base_(static_cast<size_t>(n_), 0) {}

    std::vector<int> run() {
        for (int v = 0; v < n_; ++v)
            if (match_[static_cast<size_t>(v)] == -1) augment_from(v);
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<char> used(static_cast<size_t>(n_), 0);
        for (;;) {
            a = base_[static_cast<size_t>(a)];
            used[static_cast<size_t>(a)] = 1;
            if (match_[static_cast<size_t>(a)] == -1) break;
            a = p_[static_cast<size_t>(match_[static_cast<size_t>(a)])];
        }
        for (;;) {
            b = base_[static_cast<size_t>(b)];
            if (used[static_cast<size_t>(b)]) return b;
            b = p_[static_cast<size_t>(match_[static_cast<size_t>(b)])];
        }
    }

    void mark_path(std::vector<char>& blossom, int v, int b, int child) {
        while (base_[static_cast<size_t>(v)] != b) {
            blossom[static_cast<size_t>(base_[static_cast<size_t>(v)])] = 1;
            blossom[static_cast<size_t>(base_[static_cast<size_t>(match_[static_cast<size_t>(v)])])] = 1;
            p_[static_cast<size_t>(v)] = child;
            child = match_[static_cast<size_t>(v)];
            v = p_[static_cast<size_t>(match_[static_cast<size_t>(v)])];
        }
    }

    int find_path(int root) {
        std::vector<char> used(static_cast<size_t>(n_), 0);
        std::fill(p_.begin(), p_.end(), -1);
        for (int v = 0; v < n_; ++v) base_[static_cast<size_t>(v)] = v;

        used[static_cast<size_t>(root)] = 1;
        std::vector<int> queue{root};
        size_t head = 0;
        while (head < queue.size()) {
            int v = queue[head++];
            for (int to : g_.neighbors(v)) {
                if (base_[static_cast<size_t>(v)] == base_[static_cast<size_t>(to)] ||
                    match_[static_cast<size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match_[static_cast<size_t>(to)] != -1 &&
                     p_[static_cast<size_t>(match_[static_cast<size_t>(to)])] != -1)) {
                    // odd cycle: contract the blossom
                    int cur_base = lca(v, to);
                    std::vector<char> blossom(static_cast<size_t>(n_), 0);
                    mark_path(blossom, v, cur_base, to);
                    mark_path(blossom, to, cur_base, v);
                    for (int i = 0; i < n_; ++i)
                        if (blossom[static_cast<size_t>(base_[static_cast<size_t>(i)])]) {
                            base_[static_cast<size_t>(i)] = cur_base;
                            if (!used[static_cast<size_t>(i)]) {
                                used[static_cast<size_t>(i)] = 1;
                                queue.push_back(i);
                            }
                        }
                } else if (p_[static_cast<size_t>(to)] == -1) {
                    p_[static_cast<size_t>(to)] = v;
                    if (match_[static_cast<size_t>(to)] == -1) return to;
                    used[static_cast<size_t>(match_[static_cast<size_t>(to)])] = 1;
                    queue.push_back(match_[static_cast<size_t>(to)]);
                }
            }
        }
        return -1;
    }

    void augment_from(int root) {
        int v = find_path(root);
        if (v == -1) return;
        while (v != -1) {
            int pv = p_[static_cast<size_t>(v)];
            int ppv = match_[static_cast<size_t>(pv)];
            match_[static_cast<size_t>(v)] = pv;
            match_[static_cast<size_t>(pv)] = v;
            v = ppv;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_;
    std::vector<int> p_;
    std::vector<int> base_;
};

}  // namespace

Matching max_matching(const Graph& g) {
    auto mate = Blossom(g).run();
    Matching m;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mate[static_cast<size_t>(v)] > v) m.edges.emplace_back(v, mate[static_cast<size_t>(v)]);
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

}  // namespace prismatic
