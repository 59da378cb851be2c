#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prismatic/errors.hpp"

namespace prismatic {

/// Sorted, duplicate-free set of vertex indices of some host graph.
using VertexSet = std::vector<int>;

/// Immutable simple undirected graph. Adjacency is a dense symmetric bit
/// matrix: target sizes are a few thousand vertices and O(1) adjacency tests
/// dominate the inner loops of everything built on top.
class Graph {
public:
    Graph() = default;

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v >> 6)] >>
                (v & 63)) & 1ULL;
    }

    int vertex_count() const { return n_; }
    int words_per_row() const { return words_; }

    std::span<const uint64_t> row(int v) const {
        return {bits_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
    }

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    long edge_count() const;
    /// All edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    /// Per-vertex labels; empty vector when the graph carries none.
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int v) const {
        return labels_.empty() ? std::string() : labels_[static_cast<size_t>(v)];
    }

    friend Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list,
                             std::vector<std::string> labels);
    friend Graph complement(const Graph& g);

private:
    void init(int n);
    void set_edge(int u, int v);

    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
    std::vector<std::string> labels_;
};

/// Builds a graph from the symmetric closure of `edge_list`; duplicate edges
/// are ignored. Throws InvalidEdge on out-of-range endpoints or self-loops.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list,
                  std::vector<std::string> labels = {});

/// Triple of pairwise adjacent vertices, canonically sorted so that equality
/// is set equality.
struct Triangle {
    std::array<int, 3> v;

    Triangle() : v{-1, -1, -1} {}
    Triangle(int a, int b, int c);

    bool contains(int x) const { return v[0] == x || v[1] == x || v[2] == x; }
    bool disjoint(const Triangle& o) const {
        return !contains(o.v[0]) && !contains(o.v[1]) && !contains(o.v[2]);
    }

    auto operator<=>(const Triangle&) const = default;
};

/// Every triangle exactly once, in lexicographic order of canonical triples.
std::vector<Triangle> enumerate_triangles(const Graph& g);

/// The per-pair adjacency annotation of a {diamond, K4}-free graph: each
/// adjacent pair carries its unique common neighbor when one exists.
class TMatrix {
public:
    static constexpr int32_t kNotAdjacent = -1;
    static constexpr int32_t kNoCommonNeighbor = -2;

    explicit TMatrix(int n) : n_(n), entries_(static_cast<size_t>(n) * n, kNotAdjacent) {}

    int vertex_count() const { return n_; }

    bool adjacent(int v, int w) const { return at(v, w) != kNotAdjacent; }
    std::optional<int> common_neighbor(int v, int w) const {
        int32_t e = at(v, w);
        return e >= 0 ? std::optional<int>(e) : std::nullopt;
    }

    /// Triangles through `v`, read off row v in O(n): one entry per adjacent
    /// pair with a witness.
    std::vector<Triangle> triangles_through(int v) const;

    int32_t at(int v, int w) const {
        return entries_[static_cast<size_t>(v) * n_ + static_cast<size_t>(w)];
    }
    void set(int v, int w, int32_t e) {
        entries_[static_cast<size_t>(v) * n_ + static_cast<size_t>(w)] = e;
    }

private:
    int n_;
    std::vector<int32_t> entries_;
};

/// Computes T(G) in O(n^3) bit-parallel steps. Throws NotDiamondK4Free (with
/// the 4-vertex witness) when some adjacent pair has two common neighbors,
/// i.e. the caller's {diamond, K4}-free obligation is violated.
TMatrix t_matrix(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    /// to_parent[i] = vertex of the host graph that i was reindexed from.
    std::vector<int> to_parent;
};

/// Induced subgraph on `s`, vertices reindexed 0..|s|-1 preserving order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

Graph complement(const Graph& g);

/// The perfect matching between two vertex-disjoint triangles of a prismatic
/// graph, as the three cross edges. Throws NotPrismaticWitness when the cross
/// adjacency is not a perfect matching (or the triangles share a vertex).
std::array<std::pair<int, int>, 3> disjoint_triangle_matching(const Graph& g,
                                                              const Triangle& t1,
                                                              const Triangle& t2);

}  // namespace prismatic
