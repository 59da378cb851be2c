#include "prismatic/graph.hpp"

#include <algorithm>
#include <bit>

namespace prismatic {

void Graph::init(int n) {
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<size_t>(n) * words_, 0);
}

void Graph::set_edge(int u, int v) {
    bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v >> 6)] |= 1ULL << (v & 63);
    bits_[static_cast<size_t>(v) * words_ + static_cast<size_t>(u >> 6)] |= 1ULL << (u & 63);
}

int Graph::degree(int v) const {
    int d = 0;
    for (uint64_t w : row(v)) d += std::popcount(w);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    auto r = row(v);
    for (int w = 0; w < words_; ++w) {
        uint64_t bits = r[static_cast<size_t>(w)];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

long Graph::edge_count() const {
    long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (v > u) out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list,
                  std::vector<std::string> labels) {
    if (n < 0) throw InvalidEdge("vertex count must be non-negative");
    Graph g;
    g.init(n);
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidEdge("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw InvalidEdge("self-loop at vertex " + std::to_string(u));
        g.set_edge(u, v);
    }
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n)
            throw InvalidVertex("labels must cover exactly the vertex set");
        g.labels_ = std::move(labels);
    }
    return g;
}

Triangle::Triangle(int a, int b, int c) : v{a, b, c} {
    std::sort(v.begin(), v.end());
}

namespace {

// Vertices of (row_u AND row_v) strictly above `above`, appended to out.
void common_above(const Graph& g, int u, int v, int above, std::vector<int>& out) {
    auto ru = g.row(u);
    auto rv = g.row(v);
    int start_word = (above + 1) >> 6;
    for (int w = start_word; w < g.words_per_row(); ++w) {
        uint64_t bits = ru[static_cast<size_t>(w)] & rv[static_cast<size_t>(w)];
        if (w == start_word) {
            int shift = (above + 1) & 63;
            bits &= ~0ULL << shift;
        }
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
}

}  // namespace

std::vector<Triangle> enumerate_triangles(const Graph& g) {
    std::vector<Triangle> out;
    std::vector<int> common;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            common.clear();
            common_above(g, u, v, v, common);
            for (int w : common) out.emplace_back(u, v, w);
        }
    }
    return out;
}

std::vector<Triangle> TMatrix::triangles_through(int v) const {
    std::vector<Triangle> out;
    for (int w = 0; w < n_; ++w) {
        int32_t e = at(v, w);
        if (e >= 0) out.emplace_back(v, w, e);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TMatrix t_matrix(const Graph& g) {
    int n = g.vertex_count();
    TMatrix t(n);
    std::vector<int> common;
    for (int v = 0; v < n; ++v) {
        for (int w : g.neighbors(v)) {
            if (w < v) continue;
            common.clear();
            common_above(g, v, w, -1, common);
            if (common.size() > 1) {
                std::vector<int> witness = {v, w, common[0], common[1]};
                std::sort(witness.begin(), witness.end());
                throw NotDiamondK4Free("edge (" + std::to_string(v) + "," + std::to_string(w) +
                                           ") has two common neighbors",
                                       witness);
            }
            int32_t e = common.empty() ? TMatrix::kNoCommonNeighbor
                                       : static_cast<int32_t>(common[0]);
            t.set(v, w, e);
            t.set(w, v, e);
        }
    }
    return t;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (v < 0 || v >= g.vertex_count())
            throw InvalidVertex("vertex " + std::to_string(v) + " not in host graph");

    int k = static_cast<int>(s.size());
    std::vector<std::pair<int, int>> edge_list;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(s[static_cast<size_t>(i)], s[static_cast<size_t>(j)]))
                edge_list.emplace_back(i, j);

    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(s.size());
        for (int v : s) labels.push_back(g.label(v));
    }
    return {build_graph(k, edge_list, std::move(labels)), s};
}

Graph complement(const Graph& g) {
    Graph c;
    c.init(g.vertex_count());
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        auto src = g.row(v);
        uint64_t* dst = c.bits_.data() + static_cast<size_t>(v) * c.words_;
        for (int w = 0; w < c.words_; ++w) dst[w] = ~src[static_cast<size_t>(w)];
        // clear the diagonal bit and the tail beyond n
        dst[v >> 6] &= ~(1ULL << (v & 63));
        if (n & 63) dst[c.words_ - 1] &= (1ULL << (n & 63)) - 1;
    }
    c.labels_ = g.labels();
    return c;
}

std::array<std::pair<int, int>, 3> disjoint_triangle_matching(const Graph& g,
                                                              const Triangle& t1,
                                                              const Triangle& t2) {
    if (!t1.disjoint(t2))
        throw NotPrismaticWitness("triangles share a vertex",
                                  {t1.v[0], t1.v[1], t1.v[2], t2.v[0], t2.v[1], t2.v[2]});
    std::array<std::pair<int, int>, 3> matching;
    for (int i = 0; i < 3; ++i) {
        int s = t1.v[static_cast<size_t>(i)];
        int found = -1;
        for (int t : t2.v) {
            if (g.adjacent(s, t)) {
                if (found != -1)
                    throw NotPrismaticWitness(
                        "vertex " + std::to_string(s) + " has two neighbors in the other triangle",
                        {s, found, t});
                found = t;
            }
        }
        if (found == -1)
            throw NotPrismaticWitness(
                "vertex " + std::to_string(s) + " has no neighbor in the other triangle", {s});
        matching[static_cast<size_t>(i)] = {s, found};
    }
    // unique neighbors on the t2 side as well
    if (matching[0].second == matching[1].second || matching[0].second == matching[2].second ||
        matching[1].second == matching[2].second)
        throw NotPrismaticWitness("cross adjacency is not a perfect matching",
                                  {matching[0].second, matching[1].second, matching[2].second});
    return matching;
}

}  // namespace prismatic
