#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prismatic/graph.hpp"

namespace prismatic {

/// Set of vertex-disjoint edges of the host graph.
struct Matching {
    std::vector<std::pair<int, int>> edges;  // each (u, v) with u < v, sorted
};

/// Maximum-cardinality matching via blossom contraction over augmenting
/// paths (Edmonds); deterministic given vertex order.
Matching max_matching(const Graph& g);

/// Vertex set intersecting every triangle, found under a search budget.
struct HittingSet {
    VertexSet vertices;
    int k_bound = 0;
};

/// FPT branching: pick an uncovered triangle, branch on its three vertices,
/// depth at most k. Returns a hitting set of size <= k or nullopt.
std::optional<HittingSet> bounded_hitting_set(const Graph& g, int k);

inline constexpr int kDefaultOracleLimit = 30;
inline constexpr int kSubsetScanLimit = 15;

/// Minimum hitting set by iterative deepening over bounded_hitting_set,
/// cross-validated against a direct subset scan when n <= kSubsetScanLimit.
/// Throws ScaleLimitExceeded above `limit` vertices.
HittingSet min_hitting_set_oracle(const Graph& g, int limit = kDefaultOracleLimit);

/// Partition of V into cliques of size <= 3 with (t, m, r) statistics.
struct CliqueCover {
    std::vector<VertexSet> parts;  // each sorted; parts sorted lexicographically
    int triangles = 0;
    int edges = 0;
    int singletons = 0;

    int size() const { return static_cast<int>(parts.size()); }
};

/// True iff parts partition V(g), every part is a clique of size 1..3 and the
/// stats satisfy n = 3t + 2m + r, |parts| = t + m + r.
bool validate_cover(const Graph& g, const CliqueCover& cover);

/// Removes the chosen pairwise-disjoint triangles, runs max_matching on the
/// residue and emits triangles + matched pairs + leftover singletons.
CliqueCover cover_from_triangles(const Graph& g, const std::vector<Triangle>& chosen);

struct CoverReport {
    CliqueCover cover;
    std::string branch;  // "hitting-set" or "schlafli-oracle"
    std::optional<VertexSet> hitting_set;
    std::vector<Triangle> chosen_triangles;
    double elapsed_ms = 0.0;
};

/// The bounded-hitting-set covering method. Guaranteed optimal for prismatic
/// co-bridge-free inputs (and any prismatic input with a hitting set of size
/// <= 5 or inside the 27-vertex exceptional host). Throws NotCoverable when
/// no 5-hitting-set exists and the exceptional-host embedding fails, and
/// NotDiamondK4Free when the input violates the clique-size-3 structure.
CoverReport clique_cover(const Graph& g);

/// Exact optimum by branch-and-bound over sets of disjoint triangles,
/// maximizing 2t + m with a maximum matching at every leaf. Intended for
/// n <= limit; throws ScaleLimitExceeded beyond and NotDiamondK4Free when
/// cliques of size 4 exist.
CliqueCover min_clique_cover_oracle(const Graph& g, int limit = kDefaultOracleLimit);

}  // namespace prismatic
