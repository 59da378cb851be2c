#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "prismatic/graph.hpp"
#include "prismatic/recognition.hpp"

namespace prismatic {

// ---------------------------------------------------------------------------
// Fixed constructions

/// 6-vertex complement of C6: two triangles {0,2,4}, {1,3,5} joined by the
/// perfect matching 0-3, 1-4, 2-5.
Graph prism();

/// 9 vertices a^i_j (i, j in 1..3), a^i_j ~ a^{i'}_{j'} iff i != i' and
/// j != j'. Vertex index is 3*(i-1) + (j-1).
Graph line_k33();

/// The 27-vertex graph on r^i_j, s^i_j, t^i_j: blocks internally follow the
/// line_k33 rule and r^i_j ~ s^{i'}_{j'} iff j = i' (likewise s -> t, t -> r).
Graph schlafli_complement();

/// 10 vertices a_1..a_5 (0..4), b_1..b_5 (5..9): pentagon on the a's,
/// triangles {a_i, a_{i+1}, b_{i+3}} and edges a_i b_i, indices mod 5.
Graph core_ring_of_five();

// ---------------------------------------------------------------------------
// Seeded family specs

enum class EdgeFill { Random, Complete, Empty };

struct RingOfFiveSpec {
    int v0 = 0;
    std::array<int, 5> v = {0, 0, 0, 0, 0};  // |V_1|..|V_5|
    EdgeFill ring_links = EdgeFill::Random;  // V_i - V_{i+1} adjacency
    uint64_t seed = 0;
};

/// Core ring of five plus the optional stable sets. When v0 > 0 the
/// V_i - V_{i+1} adjacency is forced empty: any such edge closes a triangle
/// with V_0 outside the core and the graph stops being prismatic.
Graph ring_of_five(const RingOfFiveSpec& spec);

struct MantledSpec {
    std::array<int, 3> v_upper = {0, 0, 0};  // |V^1|..|V^3|, complete to row i
    std::array<int, 3> v_lower = {0, 0, 0};  // |V_1|..|V_3|, complete to column i
    EdgeFill side_links = EdgeFill::Random;  // V_i - V_j adjacency within a side
    int max_resample_rounds = 64;
    uint64_t seed = 0;
};

/// L(K3,3) plus the mantle sets. Seeded side edges are rejection-resampled
/// until each side is triangle-free; throws SpecInfeasible (reporting the
/// round count) when the budget runs out.
Graph mantled_line_k33(const MantledSpec& spec);

// ---------------------------------------------------------------------------
// Path / cycle of triangles

/// The certified partition of a path/cycle of triangles graph: stable sets
/// X_1..X_{2n+1} (cycle: X_1..X_{2n}, indices read modulo 2n), a distinguished
/// nonempty hat subset in every even set, and an L/M/R split of every odd set.
struct GoodPartition {
    enum class Kind { Path, Cycle };
    Kind kind = Kind::Path;
    int n = 1;

    // 1-based by set index; index 0 unused. Even indices fill hat, odd fill
    // l/m/r; x always holds the full set.
    std::vector<VertexSet> x;
    std::vector<VertexSet> hat;
    std::vector<VertexSet> l, m, r;

    int set_count() const { return kind == Kind::Path ? 2 * n + 1 : 2 * n; }
};

enum class OneEndPolicy { Random, LowSide, HighSide };

struct PathCycleSpec {
    bool cycle = false;
    int n = 1;
    std::vector<int> hat;    // |hat(X_{2i})| for i = 1..n, each >= 1
    std::vector<int> extra;  // |X_{2i} \ hat|
    std::vector<int> rung;   // |R_{2i-1}| = |L_{2i+1}| around even set 2i
    OneEndPolicy one_end = OneEndPolicy::Random;
    EdgeFill nonhat_fill = EdgeFill::Random;  // even-even non-hat pairs at distance 2 mod 3
    uint64_t seed = 0;
};

struct PathCycleResult {
    Graph graph;
    GoodPartition partition;
};

PathCycleResult path_of_triangles(const PathCycleSpec& spec);
PathCycleResult cycle_of_triangles(const PathCycleSpec& spec);

// Built-in deterministic fixtures.
PathCycleSpec path_minimal_spec();               // n=1, a single triangle
PathCycleSpec path_ladder_spec();                // n=6, all hats singleton
PathCycleSpec path_wide_spec(int total_vertices);  // n=2, one wide even set
PathCycleSpec cycle_n8_spec();                   // n=8, all singletons

struct PartitionCheck {
    bool ok = true;
    std::string condition;  // first violated clause, e.g. "P5.1"
    std::vector<int> witness;
    std::string detail;

    explicit operator bool() const { return ok; }
};

/// Checks every clause of P1-P7 (path) or P1-P6 with modular indices plus the
/// cycle-only part of P5.4 (cycle), and the vertex-in-no-triangle remark.
/// Returns the first violated clause with a concrete witness. Throws
/// MalformedPartition when the sets do not partition V(g).
PartitionCheck verify_good_partition(const Graph& g, const GoodPartition& p);

/// A_k = union of X_i with i = k (mod 3). Only defined for path partitions:
/// a cycle has 2n != 0 (mod 3) sets, which makes the class of X_1 ambiguous.
Coloring canonical_coloring(const GoodPartition& p);

// ---------------------------------------------------------------------------
// Worn chain composition

struct ColoredGraph {
    Graph graph;
    Coloring coloring;
};

/// A cross pair (local vertex u of term_a, local vertex v of term_b) to make
/// non-adjacent even though the color pairing permits the edge.
struct WornLink {
    int term_a = 0;
    int term_b = 0;
    int u = 0;
    int v = 0;
};

/// Composes the terms under the chain rules: within-term adjacency kept; for
/// a < b only A_a-B_b, B_a-C_b, C_a-A_b cross pairs exist and default to
/// complete; each omitted pair must have both endpoints in no triangle of
/// their terms, else W3Violation is thrown.
ColoredGraph worn_chain_compose(const std::vector<ColoredGraph>& terms,
                                const std::vector<WornLink>& omitted = {});

/// line_k33 with its column coloring, ready for composition.
ColoredGraph line_k33_colored();

// ---------------------------------------------------------------------------
// Schlafli membership

/// An injective map V(g) -> V(schlafli_complement()) preserving adjacency and
/// non-adjacency, found by backtracking with candidate pruning; nullopt when
/// g is not an induced subgraph of the 27-vertex host.
std::optional<std::vector<int>> is_schlafli_prismatic(const Graph& g);

// ---------------------------------------------------------------------------
// FamilySpec text format (one `key value...` datum per line, `#` comments):
//
//   family path|cycle|ring5|mantled
//   n 6                  (path/cycle)
//   hat 2 1              (per even set index: hat <index> <size>)
//   extra 2 0
//   rung 2 1
//   one_end random|low|high
//   fill random|complete|empty
//   v0 1                 (ring5)
//   v 1 2                (ring5: v <i> <size>)
//   vupper 1 2           (mantled: V^i size)
//   vlower 1 2           (mantled: V_i size)
//   seed 42

using FamilySpec = std::variant<PathCycleSpec, RingOfFiveSpec, MantledSpec>;

FamilySpec parse_family_spec(std::istream& in);
FamilySpec parse_family_spec_file(const std::string& path);

/// Applies the seed and runs the matching generator.
Graph generate_from_spec(const FamilySpec& spec, uint64_t seed);

}  // namespace prismatic
