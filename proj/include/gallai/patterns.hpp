#pragma once

// Detection and counting of monochromatic and rainbow pattern copies inside
// an edge-colored K_n. Copies are counted as distinct edge subsets (unlabeled
// subgraphs), not embeddings: the backtracking engines count injective
// homomorphisms and divide by |Aut(pattern)|.
//
// Matchings get a dedicated subset-memoized count (branch on the lowest
// uncovered vertex); everything else goes through plain backtracking, which
// is fine for hosts up to a dozen vertices.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "core.hpp"

#include <json.hpp>

namespace gallai {

struct SubgraphPattern {
    enum class Kind { matching, path, star, triangle, broom, arbitrary };

    Kind kind = Kind::arbitrary;
    int a = 0, b = 0; // matching: edges; path: vertices; star: leaves; broom: (m, ell)
    std::vector<std::pair<int, int>> edges;
    int vertex_count = 0;

    static SubgraphPattern matching(int t) {
        if (t < 1) throw std::invalid_argument("matching needs t >= 1");
        SubgraphPattern p;
        p.kind = Kind::matching;
        p.a = t;
        for (int i = 0; i < t; ++i) p.edges.emplace_back(2 * i, 2 * i + 1);
        p.vertex_count = 2 * t;
        return p;
    }
    static SubgraphPattern path(int m) {
        if (m < 2) throw std::invalid_argument("path needs >= 2 vertices");
        SubgraphPattern p;
        p.kind = Kind::path;
        p.a = m;
        for (int i = 0; i + 1 < m; ++i) p.edges.emplace_back(i, i + 1);
        p.vertex_count = m;
        return p;
    }
    static SubgraphPattern star(int s) {
        if (s < 1) throw std::invalid_argument("star needs >= 1 leaves");
        SubgraphPattern p;
        p.kind = Kind::star;
        p.a = s;
        for (int i = 1; i <= s; ++i) p.edges.emplace_back(0, i);
        p.vertex_count = s + 1;
        return p;
    }
    static SubgraphPattern triangle() {
        SubgraphPattern p;
        p.kind = Kind::triangle;
        p.edges = {{0, 1}, {0, 2}, {1, 2}};
        p.vertex_count = 3;
        return p;
    }
    // path v0..vm (length m) plus a star with ell leaves centered at vm
    static SubgraphPattern broom(int m, int ell) {
        if (m < 1 || ell < 0) throw std::invalid_argument("broom needs m >= 1, ell >= 0");
        SubgraphPattern p;
        p.kind = Kind::broom;
        p.a = m;
        p.b = ell;
        for (int i = 0; i < m; ++i) p.edges.emplace_back(i, i + 1);
        for (int j = 0; j < ell; ++j) p.edges.emplace_back(m, m + 1 + j);
        p.vertex_count = m + ell + 1;
        return p;
    }
    static SubgraphPattern arbitrary(std::vector<std::pair<int, int>> es) {
        SubgraphPattern p;
        p.kind = Kind::arbitrary;
        int vmax = -1;
        for (auto& [u, v] : es) {
            if (u == v || u < 0 || v < 0) throw std::invalid_argument("bad pattern edge");
            if (u > v) std::swap(u, v);
            vmax = std::max(vmax, v);
        }
        std::sort(es.begin(), es.end());
        for (std::size_t i = 1; i < es.size(); ++i)
            if (es[i] == es[i - 1]) throw std::invalid_argument("duplicate pattern edge");
        p.edges = std::move(es);
        p.vertex_count = vmax + 1;
        return p;
    }

    int edge_count() const { return static_cast<int>(edges.size()); }

    // CLI mini-syntax: "mK2:3", "P:5", "S:3", "K3", "B:3,2", "edges:[[0,1],[2,3]]"
    static SubgraphPattern parse(const std::string& s) {
        auto starts = [&](const char* pre) { return s.rfind(pre, 0) == 0; };
        try {
            if (s == "K3") return triangle();
            if (starts("mK2:")) return matching(std::stoi(s.substr(4)));
            if (starts("P:")) return path(std::stoi(s.substr(2)));
            if (starts("S:")) return star(std::stoi(s.substr(2)));
            if (starts("B:")) {
                auto comma = s.find(',', 2);
                if (comma == std::string::npos) throw std::invalid_argument("broom needs B:m,ell");
                return broom(std::stoi(s.substr(2, comma - 2)), std::stoi(s.substr(comma + 1)));
            }
            if (starts("edges:")) {
                auto arr = nlohmann::json::parse(s.substr(6));
                std::vector<std::pair<int, int>> es;
                for (const auto& e : arr) es.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
                return arbitrary(std::move(es));
            }
        } catch (const std::exception& e) {
            throw std::invalid_argument("cannot parse pattern \"" + s + "\": " + e.what());
        }
        throw std::invalid_argument("unknown pattern syntax: \"" + s + "\"");
    }

    std::string describe() const {
        switch (kind) {
        case Kind::matching: return std::to_string(a) + "K2";
        case Kind::path: return "P" + std::to_string(a);
        case Kind::star: return "K1," + std::to_string(a);
        case Kind::triangle: return "K3";
        case Kind::broom: return "B" + std::to_string(a) + "," + std::to_string(b);
        case Kind::arbitrary: return "G(" + std::to_string(vertex_count) + "v," + std::to_string(edge_count()) + "e)";
        }
        return "?";
    }
};

namespace detail {

// pattern vertex order: each vertex after the first of its component has an
// already-placed neighbor, so edge checks anchor immediately
inline std::vector<int> placement_order(const SubgraphPattern& p) {
    int q = p.vertex_count;
    std::vector<std::vector<int>> adj(q);
    for (auto [u, v] : p.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> order;
    std::vector<char> seen(q, 0);
    for (int s = 0; s < q; ++s) {
        if (seen[s]) continue;
        std::vector<int> queue{s};
        seen[s] = 1;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int v = queue[h];
            order.push_back(v);
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
    }
    return order;
}

// Injective maps pattern -> host where every pattern edge satisfies
// edge_ok(hostu, hostv) and, when pinned, pattern edge `pin_pe` maps onto the
// host pair (pin_u, pin_v) in that orientation. Early exit when counting is
// off (existence checks).
template <typename EdgeOk>
long long count_embeddings(int host_n, const SubgraphPattern& p, EdgeOk&& edge_ok,
                           bool count_all, int pin_pe = -1, int pin_u = -1, int pin_v = -1) {
    if (p.vertex_count > host_n) return 0;
    auto order = placement_order(p);
    int q = p.vertex_count;
    std::vector<int> pos(q, -1); // pattern vertex -> index in order
    for (int i = 0; i < q; ++i) pos[order[i]] = i;

    // edges checked when their later endpoint (in placement order) is placed
    std::vector<std::vector<std::pair<int, int>>> checks(q); // (other pattern vertex, edge idx)
    for (int e = 0; e < p.edge_count(); ++e) {
        auto [u, v] = p.edges[e];
        if (pos[u] > pos[v]) std::swap(u, v);
        checks[pos[v]].emplace_back(u, e);
    }

    std::vector<int> image(q, -1);
    std::vector<char> used(host_n, 0);
    long long total = 0;

    std::function<bool(int)> place = [&](int i) -> bool { // returns false to abort (found)
        if (i == q) {
            ++total;
            return count_all;
        }
        int pv = order[i];
        for (int h = 0; h < host_n; ++h) {
            if (used[h]) continue;
            if (pin_pe >= 0) {
                // honor the pinned assignment
                auto [a, b] = p.edges[pin_pe];
                if (pv == a && h != pin_u) continue;
                if (pv == b && h != pin_v) continue;
                if (h == pin_u && pv != a) continue;
                if (h == pin_v && pv != b) continue;
            }
            bool ok = true;
            for (auto [other, e] : checks[i]) {
                if (!edge_ok(image[other], h, e)) { ok = false; break; }
            }
            if (!ok) continue;
            image[pv] = h;
            used[h] = 1;
            bool cont = place(i + 1);
            used[h] = 0;
            image[pv] = -1;
            if (!cont) return false;
        }
        return true;
    };
    place(0);
    return total;
}

// automorphisms of the pattern's edge set (injective edge-preserving self-maps)
inline long long automorphism_count(const SubgraphPattern& p) {
    std::vector<std::vector<char>> adj(p.vertex_count, std::vector<char>(p.vertex_count, 0));
    for (auto [u, v] : p.edges) adj[u][v] = adj[v][u] = 1;
    return count_embeddings(p.vertex_count, p,
                            [&](int hu, int hv, int) { return adj[hu][hv] != 0; }, true);
}

// ---- matchings: subset DP, branch on lowest uncovered vertex ----

struct MatchingCounter {
    int n;
    std::vector<std::uint32_t> adj; // adjacency bitmasks of one color class
    std::unordered_map<std::uint32_t, std::vector<long long>> memo;

    explicit MatchingCounter(const std::vector<std::uint32_t>& adj_masks)
        : n(static_cast<int>(adj_masks.size())), adj(adj_masks) {}

    // counts[s] = number of s-matchings using only vertices in mask
    const std::vector<long long>& count(std::uint32_t mask) {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::vector<long long> res{1};
        if (mask) {
            int v = __builtin_ctz(mask);
            std::uint32_t rest = mask & (mask - 1);
            res = count(rest); // v unmatched (copy)
            std::uint32_t nb = adj[v] & rest;
            while (nb) {
                int u = __builtin_ctz(nb);
                nb &= nb - 1;
                const auto& sub = count(rest & ~(1u << u));
                if (res.size() < sub.size() + 1) res.resize(sub.size() + 1, 0);
                for (std::size_t s = 0; s < sub.size(); ++s) res[s + 1] += sub[s];
            }
        }
        return memo.emplace(mask, std::move(res)).first->second;
    }
};

inline std::vector<std::uint32_t> color_class_masks(const EdgeColoring& c, Color col) {
    std::vector<std::uint32_t> adj(c.n, 0);
    for (int v = 1; v < c.n; ++v)
        for (int u = 0; u < v; ++u)
            if (c.color(u, v) == col) {
                adj[u] |= 1u << v;
                adj[v] |= 1u << u;
            }
    return adj;
}

// Rainbow embeddings with proper used-color stack discipline. Counts
// injective maps whose pattern edges carry pairwise distinct host colors;
// optionally pins one pattern edge onto an oriented host pair.
inline long long count_rainbow_embeddings(const EdgeColoring& c, const SubgraphPattern& p,
                                          bool count_all, int pin_pe = -1, int pin_u = -1,
                                          int pin_v = -1) {
    if (p.vertex_count > c.n) return 0;
    auto order = placement_order(p);
    int q = p.vertex_count;
    std::vector<int> pos(q, -1);
    for (int i = 0; i < q; ++i) pos[order[i]] = i;
    std::vector<std::vector<std::pair<int, int>>> checks(q);
    for (int e = 0; e < p.edge_count(); ++e) {
        auto [u, v] = p.edges[e];
        if (pos[u] > pos[v]) std::swap(u, v);
        checks[pos[v]].emplace_back(u, e);
    }
    std::vector<int> image(q, -1);
    std::vector<char> used(c.n, 0);
    std::vector<char> used_color(c.k + 1, 0);
    long long total = 0;

    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == q) {
            ++total;
            return count_all;
        }
        int pv = order[i];
        for (int h = 0; h < c.n; ++h) {
            if (used[h]) continue;
            if (pin_pe >= 0) {
                auto [a, b] = p.edges[pin_pe];
                if (pv == a && h != pin_u) continue;
                if (pv == b && h != pin_v) continue;
                if (h == pin_u && pv != a) continue;
                if (h == pin_v && pv != b) continue;
            }
            std::array<Color, 16> marked{};
            int marked_count = 0;
            bool ok = true;
            for (auto [other, e] : checks[i]) {
                (void)e;
                Color col = c.color(image[other], h);
                if (col < 1 || used_color[col]) { ok = false; break; }
                used_color[col] = 1;
                marked[marked_count++] = col;
            }
            if (ok) {
                image[pv] = h;
                used[h] = 1;
                bool cont = place(i + 1);
                used[h] = 0;
                image[pv] = -1;
                if (!cont) {
                    for (int t2 = 0; t2 < marked_count; ++t2) used_color[marked[t2]] = 0;
                    return false;
                }
            }
            for (int t2 = 0; t2 < marked_count; ++t2) used_color[marked[t2]] = 0;
        }
        return true;
    };
    place(0);
    return total;
}

// rainbow matchings: plain DFS carrying the set of used colors
inline long long count_rainbow_matchings(const EdgeColoring& c, int t, bool count_all,
                                         std::uint32_t excluded_vertices = 0,
                                         const std::vector<char>* excluded_colors = nullptr) {
    long long total = 0;
    std::vector<char> used_color(c.k + 1, 0);
    if (excluded_colors)
        for (int i = 0; i <= c.k && i < static_cast<int>(excluded_colors->size()); ++i)
            used_color[i] = (*excluded_colors)[i];
    std::function<bool(std::uint32_t, int)> go = [&](std::uint32_t covered, int size) -> bool {
        if (size == t) {
            ++total;
            return count_all;
        }
        // enough vertices left?
        if (c.n - __builtin_popcount(covered) < 2 * (t - size)) return true;
        int v = __builtin_ctz(~covered); // lowest uncovered vertex
        // branch: v stays uncovered
        if (!go(covered | (1u << v), size)) return false;
        for (int u = v + 1; u < c.n; ++u) {
            if (covered & (1u << u)) continue;
            Color col = c.color(v, u);
            if (used_color[col]) continue;
            used_color[col] = 1;
            bool cont = go(covered | (1u << v) | (1u << u), size + 1);
            used_color[col] = 0;
            if (!cont) return false;
        }
        return true;
    };
    std::uint32_t full = (c.n >= 32) ? ~0u : ((1u << c.n) - 1);
    go(excluded_vertices & full, 0);
    return total;
}

} // namespace detail

// number of s-matchings per size in one color class
inline std::vector<long long> matchings_by_size(const EdgeColoring& c, Color col) {
    if (c.n > 28) throw std::invalid_argument("matching DP supports n <= 28");
    detail::MatchingCounter mc(detail::color_class_masks(c, col));
    std::uint32_t full = (1u << c.n) - 1;
    return mc.count(full);
}

inline long long count_monochromatic(const EdgeColoring& c, const SubgraphPattern& p, Color col) {
    if (p.vertex_count > c.n) return 0;
    if (p.kind == SubgraphPattern::Kind::matching) {
        auto by_size = matchings_by_size(c, col);
        return p.a < static_cast<int>(by_size.size()) ? by_size[p.a] : 0;
    }
    long long homs = detail::count_embeddings(
        c.n, p, [&](int hu, int hv, int) { return c.color(hu, hv) == col; }, true);
    return homs / detail::automorphism_count(p);
}

inline long long count_rainbow(const EdgeColoring& c, const SubgraphPattern& p) {
    if (p.vertex_count > c.n) return 0;
    if (p.kind == SubgraphPattern::Kind::star) {
        // per-vertex count: s-subsets of incident edges with pairwise distinct
        // colors = elementary symmetric polynomial e_s of the color multiplicities
        long long total = 0;
        int s = p.a;
        for (int v = 0; v < c.n; ++v) {
            std::vector<long long> mult(c.k + 1, 0);
            for (int u = 0; u < c.n; ++u)
                if (u != v) ++mult[c.color(u, v)];
            std::vector<long long> e(s + 1, 0);
            e[0] = 1;
            for (Color col = 1; col <= c.k; ++col)
                if (mult[col])
                    for (int i = s; i >= 1; --i) e[i] += e[i - 1] * mult[col];
            total += e[s];
        }
        return total;
    }
    if (p.kind == SubgraphPattern::Kind::matching)
        return detail::count_rainbow_matchings(c, p.a, true);
    return detail::count_rainbow_embeddings(c, p, true) / detail::automorphism_count(p);
}

inline bool has_monochromatic(const EdgeColoring& c, const SubgraphPattern& p, Color col) {
    if (p.vertex_count > c.n) return false;
    if (p.kind == SubgraphPattern::Kind::matching) {
        auto by_size = matchings_by_size(c, col);
        return p.a < static_cast<int>(by_size.size()) && by_size[p.a] > 0;
    }
    return detail::count_embeddings(
               c.n, p, [&](int hu, int hv, int) { return c.color(hu, hv) == col; }, false) > 0;
}

inline bool has_monochromatic_any_color(const EdgeColoring& c, const SubgraphPattern& p) {
    for (Color col = 1; col <= c.k; ++col)
        if (has_monochromatic(c, p, col)) return true;
    return false;
}

inline bool has_rainbow(const EdgeColoring& c, const SubgraphPattern& p) {
    if (p.vertex_count > c.n) return false;
    if (p.kind == SubgraphPattern::Kind::star) {
        for (int v = 0; v < c.n; ++v)
            if (c.color_degree(v) >= p.a) return true;
        return false;
    }
    if (p.kind == SubgraphPattern::Kind::matching)
        return detail::count_rainbow_matchings(c, p.a, false) > 0;
    return detail::count_rainbow_embeddings(c, p, false) > 0;
}

// ---- copies through a specific host edge (u,v) ----
//
// In a colex-ordered assignment sweep these count exactly the copies whose
// highest-ranked edge is the edge just assigned, so summing them over the
// sweep tallies every copy once. Unassigned edges carry color 0 and are
// rejected by every predicate.

inline long long count_monochromatic_through(const EdgeColoring& c, const SubgraphPattern& p,
                                             Color col, int u, int v) {
    if (p.vertex_count > c.n || c.color(u, v) != col) return 0;
    if (p.kind == SubgraphPattern::Kind::matching) {
        if (p.a == 1) return 1;
        detail::MatchingCounter mc(detail::color_class_masks(c, col));
        std::uint32_t mask = ((1u << c.n) - 1) & ~(1u << u) & ~(1u << v);
        const auto& by_size = mc.count(mask);
        return p.a - 1 < static_cast<int>(by_size.size()) ? by_size[p.a - 1] : 0;
    }
    long long homs = 0;
    for (int e = 0; e < p.edge_count(); ++e) {
        homs += detail::count_embeddings(
            c.n, p, [&](int hu, int hv, int) { return c.color(hu, hv) == col; }, true, e, u, v);
        homs += detail::count_embeddings(
            c.n, p, [&](int hu, int hv, int) { return c.color(hu, hv) == col; }, true, e, v, u);
    }
    return homs / detail::automorphism_count(p);
}

inline long long count_rainbow_through(const EdgeColoring& c, const SubgraphPattern& p, int u,
                                       int v) {
    if (p.vertex_count > c.n || c.color(u, v) < 1) return 0;
    if (p.kind == SubgraphPattern::Kind::matching) {
        if (p.a == 1) return 1;
        std::vector<char> excluded(c.k + 1, 0);
        excluded[c.color(u, v)] = 1;
        return detail::count_rainbow_matchings(c, p.a - 1, true, (1u << u) | (1u << v), &excluded);
    }
    long long homs = 0;
    for (int e = 0; e < p.edge_count(); ++e) {
        homs += detail::count_rainbow_embeddings(c, p, true, e, u, v);
        homs += detail::count_rainbow_embeddings(c, p, true, e, v, u);
    }
    return homs / detail::automorphism_count(p);
}

struct CopyCountReport {
    std::vector<long long> mono_per_color; // index 0 unused; 1..k
    long long rainbow = 0;
    long long mono_total = 0;
    long long total = 0;
};

// rainbow-G count plus per-color monochromatic-H counts, totaled
inline CopyCountReport gm_total(const EdgeColoring& c, const SubgraphPattern& G,
                                const SubgraphPattern& H) {
    CopyCountReport r;
    r.mono_per_color.assign(c.k + 1, 0);
    for (Color col = 1; col <= c.k; ++col) {
        r.mono_per_color[col] = count_monochromatic(c, H, col);
        r.mono_total += r.mono_per_color[col];
    }
    r.rainbow = count_rainbow(c, G);
    r.total = r.rainbow + r.mono_total;
    return r;
}

// ---- brooms ----

// pairs of disjoint edges in B_{m,ell}, by direct enumeration
inline long long count_two_matchings_in_broom(int m, int ell) {
    auto p = SubgraphPattern::broom(m, ell);
    long long count = 0;
    for (std::size_t i = 0; i < p.edges.size(); ++i)
        for (std::size_t j = i + 1; j < p.edges.size(); ++j) {
            auto [a, b] = p.edges[i];
            auto [x, y] = p.edges[j];
            if (a != x && a != y && b != x && b != y) ++count;
        }
    return count;
}

struct BroomWitness {
    Color color = 0;
    std::vector<int> path;   // v_0 .. v_m, star center is path.back()
    std::vector<int> leaves; // the ell leaves
};

struct BroomSearchResult {
    bool precondition_ok = true;                    // no rainbow triangle
    std::optional<std::array<int, 3>> rainbow_triangle;
    std::optional<BroomWitness> witness;
};

// Monochromatic spanning broom: a color j, a path v_0..v_m in class j, and
// leaves attached at v_m covering the rest, m + ell = n - 1. Subset DP over
// path vertex sets; n <= 14.
inline BroomSearchResult find_mono_spanning_broom(const EdgeColoring& c) {
    if (c.n > 14) throw std::invalid_argument("spanning broom search supports n <= 14");
    if (c.n < 2) throw std::invalid_argument("spanning broom needs n >= 2");
    BroomSearchResult result;
    if (auto tri = find_rainbow_triangle(c)) {
        result.precondition_ok = false;
        result.rainbow_triangle = tri;
    }
    std::uint32_t full = (1u << c.n) - 1;

    // try colors with larger classes first
    std::vector<std::pair<int, Color>> by_size;
    for (Color col = 1; col <= c.k; ++col) {
        int sz = 0;
        for (auto ch : c.chi) if (ch == col) ++sz;
        if (sz > 0) by_size.emplace_back(-sz, col);
    }
    std::sort(by_size.begin(), by_size.end());

    for (auto [neg, col] : by_size) {
        auto adj = detail::color_class_masks(c, col);
        // dp[S] = bitmask of vertices u such that class col has a Hamiltonian
        // path of S ending at u (|S| >= 2)
        std::vector<std::uint32_t> dp(full + 1, 0);
        for (int v = 1; v < c.n; ++v)
            for (int u = 0; u < v; ++u)
                if (c.color(u, v) == col)
                    dp[(1u << u) | (1u << v)] = (1u << u) | (1u << v);
        for (std::uint32_t S = 3; S <= full; ++S) {
            std::uint32_t cand = dp[S];
            while (cand) {
                int u = __builtin_ctz(cand);
                cand &= cand - 1;
                std::uint32_t ext = adj[u] & ~S;
                while (ext) {
                    int w = __builtin_ctz(ext);
                    ext &= ext - 1;
                    dp[S | (1u << w)] |= (1u << w);
                }
            }
        }
        // look for S and endpoint u with all outside vertices color-col-adjacent to u
        for (std::uint32_t S = full; S >= 3; --S) {
            std::uint32_t ends = dp[S];
            while (ends) {
                int u = __builtin_ctz(ends);
                ends &= ends - 1;
                std::uint32_t outside = full & ~S;
                if ((outside & ~adj[u]) == 0) {
                    // reconstruct the path backwards
                    BroomWitness w;
                    w.color = col;
                    std::vector<int> path;
                    std::uint32_t T = S;
                    int cur = u;
                    path.push_back(cur);
                    while (__builtin_popcount(T) > 2) {
                        std::uint32_t rest = T & ~(1u << cur);
                        std::uint32_t prevs = dp[rest] & adj[cur];
                        if (!prevs) break; // should not happen
                        int prev = __builtin_ctz(prevs);
                        path.push_back(prev);
                        T = rest;
                        cur = prev;
                    }
                    path.push_back(__builtin_ctz(T & ~(1u << cur)));
                    std::reverse(path.begin(), path.end()); // ends at u
                    w.path = path;
                    while (outside) {
                        w.leaves.push_back(__builtin_ctz(outside));
                        outside &= outside - 1;
                    }
                    result.witness = std::move(w);
                    return result;
                }
            }
            if (S == 3) break;
        }
    }
    return result;
}

} // namespace gallai
