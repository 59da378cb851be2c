#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "prismatic/graph.hpp"

namespace prismatic {

/// Partition of V into three stable sets A, B, C (any may be empty).
struct Coloring {
    std::array<VertexSet, 3> classes;

    int class_of(int v) const {
        for (int k = 0; k < 3; ++k)
            for (int u : classes[static_cast<size_t>(k)])
                if (u == v) return k;
        return -1;
    }
};

/// True iff the classes partition V(g) and each is stable.
bool is_proper_coloring(const Graph& g, const Coloring& c);

/// A choice of one of the two cyclic orders per triangle: flipped[i] == 0
/// means v0 -> v1 -> v2 -> v0 on the canonical sorted triple, 1 the reverse.
struct Orientation {
    std::vector<Triangle> triangles;
    std::vector<uint8_t> flipped;
};

enum class CertificateKind {
    PrismaticViolation,
    ForbiddenSubgraph,
    OddParityCycle,
    ColoringWitness,
    SubstantialityWitness,
};

/// Negative-answer witness, independently re-checkable against the host
/// graph by a pure verifier (see verify_certificate).
struct Certificate {
    CertificateKind kind;
    std::vector<int> vertices;
    std::string detail;
};

struct CheckResult {
    std::optional<Certificate> violation;

    bool ok() const { return !violation.has_value(); }
    explicit operator bool() const { return ok(); }

    static CheckResult yes() { return {}; }
    static CheckResult no(Certificate c) { return {std::move(c)}; }
};

/// yes iff for every triangle T and every v outside T, |N(v) ∩ T| = 1.
/// Certificate vertices: {v, a, b, c} with |N(v) ∩ {a,b,c}| != 1.
CheckResult is_prismatic(const Graph& g);

enum class InducedPattern { C4_2K1, DIAMOND, K4, C4, CLAW, PRISM, C4_K1 };

std::string pattern_name(InducedPattern p);

/// An induced occurrence of the fixed small pattern, or nullopt. The
/// certificate lists the pattern vertices in a fixed role order (e.g. the C4
/// in cycle order followed by the isolated vertices).
std::optional<Certificate> find_induced(const Graph& g, InducedPattern pattern);

/// Wrapper over find_induced(g, C4_2K1).
CheckResult is_cobridge_free(const Graph& g);

struct OrientationResult {
    std::optional<Orientation> orientation;
    std::optional<Certificate> certificate;  // odd parity cycle of triangles

    bool orientable() const { return orientation.has_value(); }
};

/// Decides orientability by parity union-find over the triangle constraint
/// graph: every vertex-disjoint triangle pair imposes an equal/flip relation
/// between cyclic orders through its perfect matching. On failure the
/// certificate lists an odd cycle of triangles (3 vertices per triangle).
/// Throws NotPrismaticWitness when some disjoint pair lacks a matching.
OrientationResult is_orientable(const Graph& g);

/// Re-checks every disjoint-pair constraint of a returned orientation
/// directly from the definition; true iff zero violations.
bool verify_orientation(const Graph& g, const Orientation& o);

inline constexpr int kDefaultColoringLimit = 60;

/// Exact DSATUR-ordered backtracking; nullopt when no proper 3-coloring
/// exists. Throws ScaleLimitExceeded above `limit` vertices.
std::optional<Coloring> three_coloring(const Graph& g, int limit = kDefaultColoringLimit);

struct SubstantialityResult {
    bool substantial;
    /// On "no": a hitting set of size <= k-1 witnessing the failure.
    std::optional<Certificate> witness;
};

/// yes iff every vertex set of size < k misses some triangle, equivalently
/// iff the triangles admit no hitting set of size k-1.
SubstantialityResult is_k_substantial(const Graph& g, int k);

enum class BicoloredPattern { P3, C4, C4_K1 };

/// An induced occurrence of the pattern using vertices of exactly two color
/// classes of `c`, or nullopt. `c` must be a proper 3-coloring of g.
std::optional<Certificate> find_bicolored_pattern(const Graph& g, const Coloring& c,
                                                  BicoloredPattern pattern);

/// Independent re-check of a certificate against the host graph.
bool verify_certificate(const Graph& g, const Certificate& cert);

}  // namespace prismatic
