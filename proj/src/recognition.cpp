#include "prismatic/recognition.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

#include "prismatic/covering.hpp"

namespace prismatic {

bool is_proper_coloring(const Graph& g, const Coloring& c) {
    std::vector<int> cls(static_cast<size_t>(g.vertex_count()), -1);
    for (int k = 0; k < 3; ++k) {
        for (int v : c.classes[static_cast<size_t>(k)]) {
            if (v < 0 || v >= g.vertex_count()) return false;
            if (cls[static_cast<size_t>(v)] != -1) return false;
            cls[static_cast<size_t>(v)] = k;
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (cls[static_cast<size_t>(v)] == -1) return false;
    for (auto [u, v] : g.edges())
        if (cls[static_cast<size_t>(u)] == cls[static_cast<size_t>(v)]) return false;
    return true;
}

CheckResult is_prismatic(const Graph& g) {
    auto triangles = enumerate_triangles(g);
    for (const Triangle& t : triangles) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (t.contains(v)) continue;
            int cnt = g.adjacent(v, t.v[0]) + g.adjacent(v, t.v[1]) + g.adjacent(v, t.v[2]);
            if (cnt != 1)
                return CheckResult::no({CertificateKind::PrismaticViolation,
                                        {v, t.v[0], t.v[1], t.v[2]},
                                        "vertex has " + std::to_string(cnt) +
                                            " neighbors in triangle"});
        }
    }
    return CheckResult::yes();
}

std::string pattern_name(InducedPattern p) {
    switch (p) {
        case InducedPattern::C4_2K1: return "C4+2K1";
        case InducedPattern::DIAMOND: return "diamond";
        case InducedPattern::K4: return "K4";
        case InducedPattern::C4: return "C4";
        case InducedPattern::CLAW: return "claw";
        case InducedPattern::PRISM: return "prism";
        case InducedPattern::C4_K1: return "C4+K1";
    }
    return "?";
}

namespace {

// Calls fn(a, b, c, d) for every induced C4 a-b-c-d (a < c non-adjacent
// diagonal, b < d the other). Stops when fn returns true.
template <typename Fn>
bool for_each_induced_c4(const Graph& g, Fn&& fn) {
    int n = g.vertex_count();
    std::vector<int> common;
    for (int a = 0; a < n; ++a) {
        for (int c = a + 1; c < n; ++c) {
            if (g.adjacent(a, c)) continue;
            common.clear();
            auto ra = g.row(a);
            auto rc = g.row(c);
            for (int w = 0; w < g.words_per_row(); ++w) {
                uint64_t bits = ra[static_cast<size_t>(w)] & rc[static_cast<size_t>(w)];
                while (bits) {
                    common.push_back(w * 64 + std::countr_zero(bits));
                    bits &= bits - 1;
                }
            }
            for (size_t i = 0; i < common.size(); ++i)
                for (size_t j = i + 1; j < common.size(); ++j)
                    if (!g.adjacent(common[i], common[j]))
                        if (fn(a, common[i], c, common[j])) return true;
        }
    }
    return false;
}

// Vertices with no neighbor among `core` and not in `core`, ascending.
std::vector<int> anticomplete_to(const Graph& g, const std::vector<int>& core) {
    std::vector<uint64_t> mask(static_cast<size_t>(g.words_per_row()), 0);
    for (int v : core) {
        auto r = g.row(v);
        for (int w = 0; w < g.words_per_row(); ++w) mask[static_cast<size_t>(w)] |= r[static_cast<size_t>(w)];
        mask[static_cast<size_t>(v >> 6)] |= 1ULL << (v & 63);
    }
    std::vector<int> out;
    for (int w = 0; w < g.words_per_row(); ++w) {
        uint64_t bits = ~mask[static_cast<size_t>(w)];
        if (w == g.words_per_row() - 1 && (g.vertex_count() & 63))
            bits &= (1ULL << (g.vertex_count() & 63)) - 1;
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

std::optional<Certificate> find_diamond_or_k4(const Graph& g, bool want_k4) {
    int n = g.vertex_count();
    std::vector<int> common;
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            common.clear();
            auto ru = g.row(u);
            auto rv = g.row(v);
            for (int w = 0; w < g.words_per_row(); ++w) {
                uint64_t bits = ru[static_cast<size_t>(w)] & rv[static_cast<size_t>(w)];
                while (bits) {
                    common.push_back(w * 64 + std::countr_zero(bits));
                    bits &= bits - 1;
                }
            }
            for (size_t i = 0; i < common.size(); ++i) {
                for (size_t j = i + 1; j < common.size(); ++j) {
                    bool adj = g.adjacent(common[i], common[j]);
                    if (want_k4 && adj)
                        return Certificate{CertificateKind::ForbiddenSubgraph,
                                           {u, v, common[i], common[j]},
                                           "K4"};
                    if (!want_k4 && !adj)
                        return Certificate{CertificateKind::ForbiddenSubgraph,
                                           {u, v, common[i], common[j]},
                                           "diamond"};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Certificate> find_claw(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto nbrs = g.neighbors(v);
        for (size_t i = 0; i < nbrs.size(); ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j) {
                if (g.adjacent(nbrs[i], nbrs[j])) continue;
                for (size_t k = j + 1; k < nbrs.size(); ++k)
                    if (!g.adjacent(nbrs[i], nbrs[k]) && !g.adjacent(nbrs[j], nbrs[k]))
                        return Certificate{CertificateKind::ForbiddenSubgraph,
                                           {v, nbrs[i], nbrs[j], nbrs[k]},
                                           "claw"};
            }
    }
    return std::nullopt;
}

std::optional<Certificate> find_prism(const Graph& g) {
    auto triangles = enumerate_triangles(g);
    for (size_t i = 0; i < triangles.size(); ++i) {
        for (size_t j = i + 1; j < triangles.size(); ++j) {
            const Triangle& s = triangles[i];
            const Triangle& t = triangles[j];
            if (!s.disjoint(t)) continue;
            // induced prism: cross adjacency is a perfect matching
            int cross = 0;
            for (int a : s.v)
                for (int b : t.v) cross += g.adjacent(a, b);
            if (cross != 3) continue;
            int deg_ok = 1;
            std::array<int, 3> mate{};
            for (int x = 0; x < 3 && deg_ok; ++x) {
                int cnt = 0, m = -1;
                for (int y = 0; y < 3; ++y)
                    if (g.adjacent(s.v[static_cast<size_t>(x)], t.v[static_cast<size_t>(y)])) {
                        ++cnt;
                        m = t.v[static_cast<size_t>(y)];
                    }
                if (cnt != 1) deg_ok = 0;
                mate[static_cast<size_t>(x)] = m;
            }
            if (!deg_ok) continue;
            return Certificate{CertificateKind::ForbiddenSubgraph,
                               {s.v[0], s.v[1], s.v[2], mate[0], mate[1], mate[2]},
                               "prism"};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Certificate> find_induced(const Graph& g, InducedPattern pattern) {
    switch (pattern) {
        case InducedPattern::DIAMOND:
            return find_diamond_or_k4(g, false);
        case InducedPattern::K4:
            return find_diamond_or_k4(g, true);
        case InducedPattern::CLAW:
            return find_claw(g);
        case InducedPattern::PRISM:
            return find_prism(g);
        case InducedPattern::C4: {
            std::optional<Certificate> found;
            for_each_induced_c4(g, [&](int a, int b, int c, int d) {
                found = Certificate{CertificateKind::ForbiddenSubgraph, {a, b, c, d}, "C4"};
                return true;
            });
            return found;
        }
        case InducedPattern::C4_K1: {
            std::optional<Certificate> found;
            for_each_induced_c4(g, [&](int a, int b, int c, int d) {
                auto anti = anticomplete_to(g, {a, b, c, d});
                if (anti.empty()) return false;
                found = Certificate{CertificateKind::ForbiddenSubgraph,
                                    {a, b, c, d, anti[0]},
                                    "C4+K1"};
                return true;
            });
            return found;
        }
        case InducedPattern::C4_2K1: {
            // induced C4s first, then a non-adjacent pair anticomplete to one
            std::optional<Certificate> found;
            for_each_induced_c4(g, [&](int a, int b, int c, int d) {
                auto anti = anticomplete_to(g, {a, b, c, d});
                for (size_t i = 0; i < anti.size(); ++i)
                    for (size_t j = i + 1; j < anti.size(); ++j)
                        if (!g.adjacent(anti[i], anti[j])) {
                            found = Certificate{CertificateKind::ForbiddenSubgraph,
                                                {a, b, c, d, anti[i], anti[j]},
                                                "C4+2K1"};
                            return true;
                        }
                return false;
            });
            return found;
        }
    }
    return std::nullopt;
}

CheckResult is_cobridge_free(const Graph& g) {
    auto cert = find_induced(g, InducedPattern::C4_2K1);
    if (cert) return CheckResult::no(*cert);
    return CheckResult::yes();
}

namespace {

// Parity of the permutation taking sorted(s) onto sorted(t) through the
// matching: 0 when the cyclic orders correspond as-is, 1 when flipped.
int matching_parity(const Triangle& s, const Triangle& t,
                    const std::array<std::pair<int, int>, 3>& matching) {
    std::array<int, 3> perm{};
    for (int i = 0; i < 3; ++i) {
        int mate = matching[static_cast<size_t>(i)].second;
        for (int j = 0; j < 3; ++j)
            if (t.v[static_cast<size_t>(j)] == mate) perm[static_cast<size_t>(i)] = j;
    }
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
    (void)s;
    return inversions & 1;
}

}  // namespace

OrientationResult is_orientable(const Graph& g) {
    auto triangles = enumerate_triangles(g);
    size_t m = triangles.size();

    struct ConstraintEdge {
        int to;
        int parity;
    };
    std::vector<std::vector<ConstraintEdge>> constraints(m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            if (!triangles[i].disjoint(triangles[j])) continue;
            auto matching = disjoint_triangle_matching(g, triangles[i], triangles[j]);
            int parity = matching_parity(triangles[i], triangles[j], matching);
            constraints[i].push_back({static_cast<int>(j), parity});
            constraints[j].push_back({static_cast<int>(i), parity});
        }
    }

    std::vector<int> flip(m, -1);
    std::vector<int> parent(m, -1);
    for (size_t root = 0; root < m; ++root) {
        if (flip[root] != -1) continue;
        flip[root] = 0;
        std::deque<int> queue{static_cast<int>(root)};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (auto [v, parity] : constraints[static_cast<size_t>(u)]) {
                int expected = flip[static_cast<size_t>(u)] ^ parity;
                if (flip[static_cast<size_t>(v)] == -1) {
                    flip[static_cast<size_t>(v)] = expected;
                    parent[static_cast<size_t>(v)] = u;
                    queue.push_back(v);
                } else if (flip[static_cast<size_t>(v)] != expected) {
                    // odd cycle: tree path u -> lca <- v plus the edge (u, v)
                    auto path_to_root = [&](int x) {
                        std::vector<int> p;
                        for (; x != -1; x = parent[static_cast<size_t>(x)]) p.push_back(x);
                        return p;
                    };
                    auto pu = path_to_root(u);
                    auto pv = path_to_root(v);
                    while (pu.size() > 1 && pv.size() > 1 &&
                           pu[pu.size() - 2] == pv[pv.size() - 2]) {
                        pu.pop_back();
                        pv.pop_back();
                    }
                    std::vector<int> cycle(pu.begin(), pu.end());
                    for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it) cycle.push_back(*it);
                    std::vector<int> verts;
                    for (int idx : cycle)
                        for (int x : triangles[static_cast<size_t>(idx)].v) verts.push_back(x);
                    return {std::nullopt,
                            Certificate{CertificateKind::OddParityCycle, verts,
                                        "odd parity cycle of " + std::to_string(cycle.size()) +
                                            " triangles"}};
                }
            }
        }
    }

    Orientation o;
    o.triangles = std::move(triangles);
    o.flipped.assign(m, 0);
    for (size_t i = 0; i < m; ++i) o.flipped[i] = static_cast<uint8_t>(flip[i]);
    return {std::move(o), std::nullopt};
}

bool verify_orientation(const Graph& g, const Orientation& o) {
    for (size_t i = 0; i < o.triangles.size(); ++i) {
        for (size_t j = i + 1; j < o.triangles.size(); ++j) {
            if (!o.triangles[i].disjoint(o.triangles[j])) continue;
            auto matching = disjoint_triangle_matching(g, o.triangles[i], o.triangles[j]);
            int parity = matching_parity(o.triangles[i], o.triangles[j], matching);
            if ((o.flipped[i] ^ o.flipped[j]) != parity) return false;
        }
    }
    return true;
}

std::optional<Coloring> three_coloring(const Graph& g, int limit) {
    int n = g.vertex_count();
    if (n > limit)
        throw ScaleLimitExceeded("three_coloring limited to " + std::to_string(limit) +
                                 " vertices, got " + std::to_string(n));

    std::vector<int> color(static_cast<size_t>(n), -1);
    std::vector<std::array<bool, 3>> seen(static_cast<size_t>(n), {false, false, false});

    // DSATUR order: highest saturation, then highest degree, then index.
    auto pick = [&]() {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<size_t>(v)] != -1) continue;
            int sat = seen[static_cast<size_t>(v)][0] + seen[static_cast<size_t>(v)][1] +
                      seen[static_cast<size_t>(v)][2];
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    };

    std::vector<std::vector<int>> nbrs(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) nbrs[static_cast<size_t>(v)] = g.neighbors(v);

    auto recompute_seen = [&](int v) {
        seen[static_cast<size_t>(v)] = {false, false, false};
        for (int u : nbrs[static_cast<size_t>(v)])
            if (color[static_cast<size_t>(u)] != -1)
                seen[static_cast<size_t>(v)][static_cast<size_t>(color[static_cast<size_t>(u)])] =
                    true;
    };

    int max_used = -1;
    std::vector<std::pair<int, int>> trail;  // (vertex, max_used before)

    auto solve = [&](auto&& self) -> bool {
        int v = pick();
        if (v == -1) return true;
        // colors beyond max_used+1 are symmetric; trying one suffices
        int cap = std::min(2, max_used + 1);
        for (int c = 0; c <= cap; ++c) {
            if (seen[static_cast<size_t>(v)][static_cast<size_t>(c)]) continue;
            int prev_max = max_used;
            color[static_cast<size_t>(v)] = c;
            max_used = std::max(max_used, c);
            for (int u : nbrs[static_cast<size_t>(v)])
                seen[static_cast<size_t>(u)][static_cast<size_t>(c)] = true;
            if (self(self)) return true;
            color[static_cast<size_t>(v)] = -1;
            max_used = prev_max;
            for (int u : nbrs[static_cast<size_t>(v)]) recompute_seen(u);
        }
        return false;
    };

    if (!solve(solve)) return std::nullopt;

    Coloring result;
    for (int v = 0; v < n; ++v)
        result.classes[static_cast<size_t>(color[static_cast<size_t>(v)])].push_back(v);
    return result;
}

SubstantialityResult is_k_substantial(const Graph& g, int k) {
    if (k <= 0) throw Error("is_k_substantial requires k >= 1");
    auto hs = bounded_hitting_set(g, k - 1);
    if (hs) {
        return {false,
                Certificate{CertificateKind::SubstantialityWitness, hs->vertices,
                            "hitting set of size " + std::to_string(hs->vertices.size())}};
    }
    return {true, std::nullopt};
}

std::optional<Certificate> find_bicolored_pattern(const Graph& g, const Coloring& c,
                                                  BicoloredPattern pattern) {
    auto in_class = [&](int k) -> const VertexSet& { return c.classes[static_cast<size_t>(k)]; };

    if (pattern == BicoloredPattern::P3) {
        for (int x = 0; x < 3; ++x) {
            for (int y = 0; y < 3; ++y) {
                if (x == y) continue;
                for (int mid : in_class(y)) {
                    std::vector<int> ends;
                    for (int u : in_class(x))
                        if (g.adjacent(mid, u)) ends.push_back(u);
                    for (size_t i = 0; i < ends.size(); ++i)
                        for (size_t j = i + 1; j < ends.size(); ++j)
                            if (!g.adjacent(ends[i], ends[j]))
                                return Certificate{CertificateKind::ForbiddenSubgraph,
                                                   {ends[i], mid, ends[j]},
                                                   "bicolored-P3"};
                }
            }
        }
        return std::nullopt;
    }

    // bicolored C4 / C4+K1: the cycle alternates between the two classes
    for (int x = 0; x < 3; ++x) {
        for (int y = x + 1; y < 3; ++y) {
            const VertexSet& X = in_class(x);
            const VertexSet& Y = in_class(y);
            for (size_t i = 0; i < X.size(); ++i) {
                for (size_t j = i + 1; j < X.size(); ++j) {
                    int a = X[i], cc = X[j];
                    if (g.adjacent(a, cc)) continue;
                    std::vector<int> mids;
                    for (int b : Y)
                        if (g.adjacent(a, b) && g.adjacent(cc, b)) mids.push_back(b);
                    for (size_t p = 0; p < mids.size(); ++p) {
                        for (size_t q = p + 1; q < mids.size(); ++q) {
                            if (g.adjacent(mids[p], mids[q])) continue;
                            std::vector<int> cyc = {a, mids[p], cc, mids[q]};
                            if (pattern == BicoloredPattern::C4)
                                return Certificate{CertificateKind::ForbiddenSubgraph, cyc,
                                                   "bicolored-C4"};
                            // C4+K1: fifth vertex from X ∪ Y anticomplete to the cycle
                            for (const VertexSet* cls : {&X, &Y}) {
                                for (int e : *cls) {
                                    if (e == a || e == cc || e == mids[p] || e == mids[q])
                                        continue;
                                    if (!g.adjacent(e, a) && !g.adjacent(e, cc) &&
                                        !g.adjacent(e, mids[p]) && !g.adjacent(e, mids[q])) {
                                        std::vector<int> verts = cyc;
                                        verts.push_back(e);
                                        return Certificate{CertificateKind::ForbiddenSubgraph,
                                                           verts, "bicolored-C4+K1"};
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

bool verify_certificate(const Graph& g, const Certificate& cert) {
    const auto& vs = cert.vertices;
    auto all_in_range = [&]() {
        for (int v : vs)
            if (v < 0 || v >= g.vertex_count()) return false;
        return true;
    };
    if (!all_in_range()) return false;

    switch (cert.kind) {
        case CertificateKind::PrismaticViolation: {
            if (vs.size() != 4) return false;
            int v = vs[0];
            Triangle t(vs[1], vs[2], vs[3]);
            if (!g.adjacent(t.v[0], t.v[1]) || !g.adjacent(t.v[0], t.v[2]) ||
                !g.adjacent(t.v[1], t.v[2]))
                return false;
            if (t.contains(v)) return false;
            int cnt = g.adjacent(v, t.v[0]) + g.adjacent(v, t.v[1]) + g.adjacent(v, t.v[2]);
            return cnt != 1;
        }
        case CertificateKind::ForbiddenSubgraph: {
            auto edge = [&](size_t i, size_t j) { return g.adjacent(vs[i], vs[j]); };
            auto distinct = [&]() {
                for (size_t i = 0; i < vs.size(); ++i)
                    for (size_t j = i + 1; j < vs.size(); ++j)
                        if (vs[i] == vs[j]) return false;
                return true;
            };
            if (!distinct()) return false;
            auto is_c4 = [&]() {
                return vs.size() >= 4 && edge(0, 1) && edge(1, 2) && edge(2, 3) && edge(3, 0) &&
                       !edge(0, 2) && !edge(1, 3);
            };
            if (cert.detail == "C4") return vs.size() == 4 && is_c4();
            if (cert.detail == "bicolored-C4") return vs.size() == 4 && is_c4();
            if (cert.detail == "C4+K1" || cert.detail == "bicolored-C4+K1") {
                if (vs.size() != 5 || !is_c4()) return false;
                for (size_t i = 0; i < 4; ++i)
                    if (edge(4, i)) return false;
                return true;
            }
            if (cert.detail == "C4+2K1") {
                if (vs.size() != 6 || !is_c4()) return false;
                if (edge(4, 5)) return false;
                for (size_t i = 0; i < 4; ++i)
                    if (edge(4, i) || edge(5, i)) return false;
                return true;
            }
            if (cert.detail == "diamond")
                return vs.size() == 4 && edge(0, 1) && edge(0, 2) && edge(0, 3) && edge(1, 2) &&
                       edge(1, 3) && !edge(2, 3);
            if (cert.detail == "K4")
                return vs.size() == 4 && edge(0, 1) && edge(0, 2) && edge(0, 3) && edge(1, 2) &&
                       edge(1, 3) && edge(2, 3);
            if (cert.detail == "claw")
                return vs.size() == 4 && edge(0, 1) && edge(0, 2) && edge(0, 3) && !edge(1, 2) &&
                       !edge(1, 3) && !edge(2, 3);
            if (cert.detail == "prism") {
                if (vs.size() != 6) return false;
                bool tri = edge(0, 1) && edge(0, 2) && edge(1, 2) && edge(3, 4) && edge(3, 5) &&
                           edge(4, 5);
                bool rungs = edge(0, 3) && edge(1, 4) && edge(2, 5) && !edge(0, 4) &&
                             !edge(0, 5) && !edge(1, 3) && !edge(1, 5) && !edge(2, 3) &&
                             !edge(2, 4);
                return tri && rungs;
            }
            if (cert.detail == "bicolored-P3")
                return vs.size() == 3 && edge(0, 1) && edge(1, 2) && !edge(0, 2);
            return false;
        }
        case CertificateKind::OddParityCycle: {
            if (vs.size() % 3 != 0 || vs.size() < 6) return false;
            size_t k = vs.size() / 3;
            std::vector<Triangle> cyc;
            for (size_t i = 0; i < k; ++i) {
                Triangle t(vs[3 * i], vs[3 * i + 1], vs[3 * i + 2]);
                if (!g.adjacent(t.v[0], t.v[1]) || !g.adjacent(t.v[0], t.v[2]) ||
                    !g.adjacent(t.v[1], t.v[2]))
                    return false;
                cyc.push_back(t);
            }
            int parity_sum = 0;
            for (size_t i = 0; i < k; ++i) {
                const Triangle& s = cyc[i];
                const Triangle& t = cyc[(i + 1) % k];
                if (!s.disjoint(t)) return false;
                auto matching = disjoint_triangle_matching(g, s, t);
                parity_sum ^= matching_parity(s, t, matching);
            }
            return parity_sum == 1;
        }
        case CertificateKind::SubstantialityWitness: {
            for (const Triangle& t : enumerate_triangles(g)) {
                bool hit = false;
                for (int v : vs)
                    if (t.contains(v)) hit = true;
                if (!hit) return false;
            }
            return true;
        }
        case CertificateKind::ColoringWitness:
            return vs.size() == 2 && g.adjacent(vs[0], vs[1]);
    }
    return false;
}

}  // namespace prismatic
