#include "prismatic/covering.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "prismatic/families.hpp"

namespace prismatic {

std::optional<HittingSet> bounded_hitting_set(const Graph& g, int k) {
    if (k < 0) return std::nullopt;
    auto triangles = enumerate_triangles(g);
    if (triangles.empty()) return HittingSet{{}, k};

    std::vector<std::vector<int>> through(static_cast<size_t>(g.vertex_count()));
    for (size_t i = 0; i < triangles.size(); ++i)
        for (int v : triangles[i].v) through[static_cast<size_t>(v)].push_back(static_cast<int>(i));

    std::vector<int> cover_count(triangles.size(), 0);
    VertexSet chosen;

    std::function<bool(int)> dfs = [&](int budget) -> bool {
        size_t uncovered = triangles.size();
        for (size_t i = 0; i < triangles.size(); ++i)
            if (cover_count[i] == 0) {
                uncovered = i;
                break;
            }
        if (uncovered == triangles.size()) return true;
        if (budget == 0) return false;
        for (int v : triangles[uncovered].v) {
            chosen.push_back(v);
            for (int t : through[static_cast<size_t>(v)]) ++cover_count[static_cast<size_t>(t)];
            if (dfs(budget - 1)) return true;
            for (int t : through[static_cast<size_t>(v)]) --cover_count[static_cast<size_t>(t)];
            chosen.pop_back();
        }
        return false;
    };

    if (!dfs(k)) return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return HittingSet{std::move(chosen), k};
}

namespace {

// Independent route for small n: scan all vertex subsets by increasing size.
int subset_scan_lambda(const Graph& g) {
    auto triangles = enumerate_triangles(g);
    if (triangles.empty()) return 0;
    int n = g.vertex_count();
    std::vector<uint32_t> tri_masks;
    tri_masks.reserve(triangles.size());
    for (const Triangle& t : triangles)
        tri_masks.push_back((1u << t.v[0]) | (1u << t.v[1]) | (1u << t.v[2]));

    int best = n;
    for (uint32_t s = 0; s < (1u << n); ++s) {
        int size = std::popcount(s);
        if (size >= best) continue;
        bool hits_all = true;
        for (uint32_t m : tri_masks)
            if (!(m & s)) {
                hits_all = false;
                break;
            }
        if (hits_all) best = size;
    }
    return best;
}

}  // namespace

HittingSet min_hitting_set_oracle(const Graph& g, int limit) {
    if (g.vertex_count() > limit)
        throw ScaleLimitExceeded("min_hitting_set_oracle limited to " + std::to_string(limit) +
                                 " vertices, got " + std::to_string(g.vertex_count()));
    std::optional<HittingSet> found;
    for (int k = 0; k <= g.vertex_count(); ++k) {
        found = bounded_hitting_set(g, k);
        if (found) {
            found->k_bound = k;
            break;
        }
    }
    if (g.vertex_count() <= kSubsetScanLimit) {
        int lambda = subset_scan_lambda(g);
        if (lambda != static_cast<int>(found->vertices.size()))
            throw Error("hitting-set oracle disagreement: branching found " +
                        std::to_string(found->vertices.size()) + ", subset scan found " +
                        std::to_string(lambda));
    }
    return *found;
}

bool validate_cover(const Graph& g, const CliqueCover& cover) {
    std::vector<int> seen(static_cast<size_t>(g.vertex_count()), 0);
    int t = 0, m = 0, r = 0;
    for (const VertexSet& part : cover.parts) {
        if (part.empty() || part.size() > 3) return false;
        for (int v : part) {
            if (v < 0 || v >= g.vertex_count()) return false;
            if (seen[static_cast<size_t>(v)]++) return false;
        }
        for (size_t i = 0; i < part.size(); ++i)
            for (size_t j = i + 1; j < part.size(); ++j)
                if (!g.adjacent(part[i], part[j])) return false;
        if (part.size() == 3) ++t;
        else if (part.size() == 2) ++m;
        else ++r;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!seen[static_cast<size_t>(v)]) return false;
    if (t != cover.triangles || m != cover.edges || r != cover.singletons) return false;
    if (cover.size() != t + m + r) return false;
    if (g.vertex_count() != 3 * t + 2 * m + r) return false;
    return true;
}

namespace {

CliqueCover assemble_cover(const std::vector<VertexSet>& parts) {
    CliqueCover cover;
    cover.parts = parts;
    for (VertexSet& p : cover.parts) std::sort(p.begin(), p.end());
    std::sort(cover.parts.begin(), cover.parts.end());
    for (const VertexSet& p : cover.parts) {
        if (p.size() == 3) ++cover.triangles;
        else if (p.size() == 2) ++cover.edges;
        else ++cover.singletons;
    }
    return cover;
}

}  // namespace

CliqueCover cover_from_triangles(const Graph& g, const std::vector<Triangle>& chosen) {
    std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
    for (const Triangle& t : chosen) {
        for (int v : t.v) {
            if (v < 0 || v >= g.vertex_count())
                throw InvalidVertex("triangle vertex out of range");
            if (used[static_cast<size_t>(v)])
                throw OverlappingTriangles("vertex " + std::to_string(v) +
                                           " appears in two chosen triangles");
            used[static_cast<size_t>(v)] = 1;
        }
    }

    VertexSet residue;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!used[static_cast<size_t>(v)]) residue.push_back(v);
    auto sub = induced_subgraph(g, residue);
    Matching matching = max_matching(sub.graph);

    std::vector<VertexSet> parts;
    std::vector<char> matched(residue.size(), 0);
    for (const Triangle& t : chosen) parts.push_back({t.v[0], t.v[1], t.v[2]});
    for (auto [u, v] : matching.edges) {
        matched[static_cast<size_t>(u)] = matched[static_cast<size_t>(v)] = 1;
        parts.push_back({sub.to_parent[static_cast<size_t>(u)], sub.to_parent[static_cast<size_t>(v)]});
    }
    for (size_t i = 0; i < residue.size(); ++i)
        if (!matched[i]) parts.push_back({sub.to_parent[i]});
    return assemble_cover(parts);
}

CoverReport clique_cover(const Graph& g) {
    auto started = std::chrono::steady_clock::now();
    CoverReport report;

    TMatrix t = t_matrix(g);
    auto hs = bounded_hitting_set(g, 5);

    if (hs) {
        report.branch = "hitting-set";
        report.hitting_set = hs->vertices;

        std::vector<std::vector<Triangle>> slots;
        for (int s : hs->vertices) slots.push_back(t.triangles_through(s));

        std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
        std::vector<Triangle> current;
        std::optional<CliqueCover> best;
        std::vector<Triangle> best_choice;

        // at most one triangle per slot; every spanned set of disjoint
        // triangles shows up because a disjoint family meets the hitting set
        // injectively
        std::function<void(size_t)> enumerate = [&](size_t slot) {
            if (slot == slots.size()) {
                CliqueCover cover = cover_from_triangles(g, current);
                if (!best || cover.size() < best->size() ||
                    (cover.size() == best->size() && cover.parts < best->parts)) {
                    best = std::move(cover);
                    best_choice = current;
                }
                return;
            }
            enumerate(slot + 1);
            for (const Triangle& tri : slots[slot]) {
                if (used[static_cast<size_t>(tri.v[0])] || used[static_cast<size_t>(tri.v[1])] ||
                    used[static_cast<size_t>(tri.v[2])])
                    continue;
                for (int v : tri.v) used[static_cast<size_t>(v)] = 1;
                current.push_back(tri);
                enumerate(slot + 1);
                current.pop_back();
                for (int v : tri.v) used[static_cast<size_t>(v)] = 0;
            }
        };
        enumerate(0);

        report.cover = std::move(*best);
        report.chosen_triangles = std::move(best_choice);
    } else {
        report.branch = "schlafli-oracle";
        auto embedding = is_schlafli_prismatic(g);
        if (!embedding)
            throw NotCoverable(
                "no hitting set of size 5 and not Schlafli-prismatic; input violates the "
                "co-bridge-free prismatic contract");
        report.cover = min_clique_cover_oracle(g);
    }

    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return report;
}

CliqueCover min_clique_cover_oracle(const Graph& g, int limit) {
    int n = g.vertex_count();
    if (n > limit)
        throw ScaleLimitExceeded("min_clique_cover_oracle limited to " + std::to_string(limit) +
                                 " vertices, got " + std::to_string(n));
    t_matrix(g);  // rejects graphs with cliques of size 4

    auto triangles = enumerate_triangles(g);
    std::vector<char> used(static_cast<size_t>(n), 0);

    int best_value = -1;
    std::vector<Triangle> best_triangles;
    std::vector<Triangle> current;

    // maximize 2t + m over disjoint triangle sets; remaining f free vertices
    // contribute at most floor(2f/3)
    std::function<void(size_t, int)> dfs = [&](size_t idx, int free) {
        int t_cur = static_cast<int>(current.size());
        if (2 * t_cur + (2 * free) / 3 <= best_value) return;

        VertexSet residue;
        for (int v = 0; v < n; ++v)
            if (!used[static_cast<size_t>(v)]) residue.push_back(v);
        auto sub = induced_subgraph(g, residue);
        int m = static_cast<int>(max_matching(sub.graph).edges.size());
        if (2 * t_cur + m > best_value) {
            best_value = 2 * t_cur + m;
            best_triangles = current;
        }

        for (size_t i = idx; i < triangles.size(); ++i) {
            const Triangle& tri = triangles[i];
            if (used[static_cast<size_t>(tri.v[0])] || used[static_cast<size_t>(tri.v[1])] ||
                used[static_cast<size_t>(tri.v[2])])
                continue;
            for (int v : tri.v) used[static_cast<size_t>(v)] = 1;
            current.push_back(tri);
            dfs(i + 1, free - 3);
            current.pop_back();
            for (int v : tri.v) used[static_cast<size_t>(v)] = 0;
        }
    };
    dfs(0, n);

    return cover_from_triangles(g, best_triangles);
}

}  // namespace prismatic
