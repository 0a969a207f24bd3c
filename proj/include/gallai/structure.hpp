#pragma once

// Structure results for colorings of complete graphs: Gallai partitions of
// rainbow-triangle-free colorings, the case analyses of rainbow-P5-free and
// rainbow-K13-free colorings, partitions of locally bounded colorings, and
// the small-host observation checks.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core.hpp"
#include "patterns.hpp"

#include <json.hpp>

namespace gallai {

struct GallaiPartition {
    std::vector<std::vector<int>> parts;           // each sorted; ordered by leader
    std::map<std::pair<int, int>, Color> reduced;  // part-index pair (i<j) -> color
    std::set<Color> reduced_colors;

    int part_count() const { return static_cast<int>(parts.size()); }
};

namespace detail {

// checks both Gallai clauses edge by edge; returns false on any violation
inline bool validate_gallai(const EdgeColoring& c, GallaiPartition& gp) {
    int t = gp.part_count();
    if (t < 2) return false;
    std::vector<int> part_of(c.n, -1);
    for (int i = 0; i < t; ++i)
        for (int v : gp.parts[i]) {
            if (v < 0 || v >= c.n || part_of[v] != -1) return false;
            part_of[v] = i;
        }
    for (int v = 0; v < c.n; ++v)
        if (part_of[v] == -1) return false;
    gp.reduced.clear();
    gp.reduced_colors.clear();
    for (int v = 1; v < c.n; ++v)
        for (int u = 0; u < v; ++u) {
            int pi = part_of[u], pj = part_of[v];
            if (pi == pj) continue;
            auto key = std::minmax(pi, pj);
            Color col = c.color(u, v);
            auto [it, fresh] = gp.reduced.emplace(std::pair<int, int>(key.first, key.second), col);
            if (!fresh && it->second != col) return false; // pair not homogeneous
            gp.reduced_colors.insert(col);
        }
    return gp.reduced_colors.size() <= 2;
}

inline std::vector<std::vector<int>> components_excluding_colors(const EdgeColoring& c,
                                                                 const std::set<Color>& excluded) {
    std::vector<int> comp(c.n, -1);
    int count = 0;
    for (int s = 0; s < c.n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = count;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < c.n; ++u) {
                if (u == v || comp[u] != -1) continue;
                if (excluded.count(c.color(u, v))) continue; // edge removed
                comp[u] = count;
                stack.push_back(u);
            }
        }
        ++count;
    }
    std::vector<std::vector<int>> parts(count);
    for (int v = 0; v < c.n; ++v) parts[comp[v]].push_back(v);
    return parts;
}

// merge parts whose between-edges are not monochromatic, to a fixpoint
inline std::vector<std::vector<int>> force_homogeneous(const EdgeColoring& c,
                                                       std::vector<std::vector<int>> parts) {
    bool changed = true;
    while (changed && parts.size() >= 2) {
        changed = false;
        for (std::size_t i = 0; i < parts.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < parts.size() && !changed; ++j) {
                Color seen = 0;
                bool mixed = false;
                for (int u : parts[i]) {
                    for (int v : parts[j]) {
                        Color col = c.color(u, v);
                        if (seen == 0) seen = col;
                        else if (seen != col) { mixed = true; break; }
                    }
                    if (mixed) break;
                }
                if (mixed) {
                    parts[i].insert(parts[i].end(), parts[j].begin(), parts[j].end());
                    std::sort(parts[i].begin(), parts[i].end());
                    parts.erase(parts.begin() + j);
                    changed = true;
                }
            }
    }
    return parts;
}

// greedy optional coarsening: merge two parts whenever every other part sees
// them in the same color
inline void coarsen(const EdgeColoring& c, std::vector<std::vector<int>>& parts) {
    auto between = [&](const std::vector<int>& a, const std::vector<int>& b) {
        return c.color(a.front(), b.front());
    };
    bool changed = true;
    while (changed && parts.size() > 2) {
        changed = false;
        for (std::size_t i = 0; i < parts.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < parts.size() && !changed; ++j) {
                bool mergeable = true;
                for (std::size_t l = 0; l < parts.size(); ++l) {
                    if (l == i || l == j) continue;
                    if (between(parts[i], parts[l]) != between(parts[j], parts[l])) {
                        mergeable = false;
                        break;
                    }
                }
                if (mergeable) {
                    parts[i].insert(parts[i].end(), parts[j].begin(), parts[j].end());
                    std::sort(parts[i].begin(), parts[i].end());
                    parts.erase(parts.begin() + j);
                    changed = true;
                }
            }
    }
}

inline void sort_parts(std::vector<std::vector<int>>& parts) {
    for (auto& p : parts) std::sort(p.begin(), p.end());
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

} // namespace detail

// Coarsest valid Gallai partition of a rainbow-triangle-free coloring.
// A 2-part partition exists iff removing some single color disconnects the
// host; otherwise candidates come from removing color pairs, forced merges
// restore pair homogeneity, and greedy coarsening shrinks the part count.
inline GallaiPartition gallai_partition(const EdgeColoring& c) {
    if (c.n < 2) throw std::invalid_argument("needs n >= 2");
    if (auto tri = find_rainbow_triangle(c))
        throw StructuralError("rainbow triangle present",
                              {(*tri)[0], (*tri)[1], (*tri)[2]});
    auto used = c.used_colors();

    std::optional<GallaiPartition> best;
    auto consider = [&](std::vector<std::vector<int>> parts) {
        if (parts.size() < 2) return;
        detail::sort_parts(parts);
        GallaiPartition gp;
        gp.parts = std::move(parts);
        if (!detail::validate_gallai(c, gp)) return;
        if (!best || gp.part_count() < best->part_count() ||
            (gp.part_count() == best->part_count() && gp.parts < best->parts))
            best = std::move(gp);
    };

    // single colors first: any disconnection gives a 2-part partition
    for (Color col : used) {
        auto comps = detail::components_excluding_colors(c, {col});
        if (comps.size() < 2) continue;
        detail::sort_parts(comps);
        std::vector<int> rest;
        for (std::size_t i = 1; i < comps.size(); ++i)
            rest.insert(rest.end(), comps[i].begin(), comps[i].end());
        consider({comps[0], rest});
    }
    if (!best) {
        for (std::size_t a = 0; a < used.size(); ++a)
            for (std::size_t b = a + 1; b < used.size(); ++b) {
                auto comps = detail::components_excluding_colors(c, {used[a], used[b]});
                if (comps.size() < 2) continue;
                comps = detail::force_homogeneous(c, comps);
                if (comps.size() < 2) continue;
                detail::coarsen(c, comps);
                consider(std::move(comps));
            }
    }
    if (!best)
        throw StructuralError("no Gallai partition found on a rainbow-triangle-free coloring; "
                              "this contradicts the partition theorem");
    GallaiPartition gp = *best;
    if (!detail::validate_gallai(c, gp)) throw std::logic_error("partition failed re-validation");
    return gp;
}

// ---- rainbow-P5-free / rainbow-K13-free case analyses ----

struct StructureCase {
    char id = '?';
    nlohmann::json witness;
};

namespace detail {

// color d is dominant iff every vertex is incident to at most one color
// besides d; classes follow from the incident color sets
inline std::optional<nlohmann::json> dominant_color_witness(const EdgeColoring& c, Color d) {
    std::map<Color, std::vector<int>> classes;
    std::vector<int> a_class;
    for (int v = 0; v < c.n; ++v) {
        Color other = 0;
        for (int u = 0; u < c.n; ++u) {
            if (u == v) continue;
            Color col = c.color(u, v);
            if (col == d) continue;
            if (other == 0) other = col;
            else if (other != col) return std::nullopt; // two non-d colors at v
        }
        if (other == 0) a_class.push_back(v);
        else classes[other].push_back(v);
    }
    nlohmann::json cls = nlohmann::json::object();
    for (auto& [col, verts] : classes) cls[std::to_string(col)] = verts;
    return nlohmann::json{{"dominant_color", d}, {"A", a_class}, {"classes", cls}};
}

inline std::optional<Color> monochromatic_after_deleting(const EdgeColoring& c, int v) {
    Color seen = 0;
    for (int y = 1; y < c.n; ++y)
        for (int x = 0; x < y; ++x) {
            if (x == v || y == v) continue;
            Color col = c.color(x, y);
            if (seen == 0) seen = col;
            else if (seen != col) return std::nullopt;
        }
    return seen == 0 ? std::optional<Color>() : std::optional<Color>(seen);
}

} // namespace detail

// first rainbow path on m vertices, as a vertex sequence
inline std::optional<std::vector<int>> find_rainbow_path(const EdgeColoring& c, int m) {
    std::vector<int> seq;
    std::vector<char> used(c.n, 0);
    std::vector<char> used_color(c.k + 1, 0);
    std::optional<std::vector<int>> found;
    std::function<bool(void)> extend = [&]() -> bool {
        if (static_cast<int>(seq.size()) == m) {
            found = seq;
            return true;
        }
        for (int v = 0; v < c.n; ++v) {
            if (used[v]) continue;
            Color col = 0;
            if (!seq.empty()) {
                col = c.color(seq.back(), v);
                if (used_color[col]) continue;
                used_color[col] = 1;
            }
            seq.push_back(v);
            used[v] = 1;
            if (extend()) return true;
            used[v] = 0;
            seq.pop_back();
            if (col) used_color[col] = 0;
        }
        return false;
    };
    extend();
    return found;
}

// All applicable items of the rainbow-P5-free case analysis, with witnesses.
// An empty result would contradict the theorem and throws.
inline std::vector<StructureCase> classify_rainbow_p5_free(const EdgeColoring& c) {
    if (c.n < 5) throw std::invalid_argument("classification needs n >= 5");
    if (auto p = find_rainbow_path(c, 5))
        throw StructuralError("rainbow P5 present", *p);
    std::vector<StructureCase> cases;
    auto used = c.used_colors();

    if (used.size() <= 3) cases.push_back({'a', {{"colors_used", used}}});

    for (Color d : used)
        if (auto w = detail::dominant_color_witness(c, d)) {
            cases.push_back({'b', *w});
            break;
        }

    for (int v = 0; v < c.n; ++v)
        if (auto col = detail::monochromatic_after_deleting(c, v)) {
            cases.push_back({'c', {{"vertex", v}, {"color", *col}}});
            break;
        }

    // (d): E^b = {v1v2}, E^c = {v1v3}, E^e contains v2v3 plus perhaps edges at
    // v1, everything else in one further color
    bool found_d = false;
    for (int v1 = 0; v1 < c.n && !found_d; ++v1)
        for (int v2 = 0; v2 < c.n && !found_d; ++v2) {
            if (v2 == v1) continue;
            for (int v3 = v2 + 1; v3 < c.n && !found_d; ++v3) {
                if (v3 == v1) continue;
                Color b = c.color(v1, v2), cc = c.color(v1, v3), e = c.color(v2, v3);
                if (b == cc || b == e || cc == e) continue;
                Color base = 0;
                bool ok = true;
                for (int y = 1; y < c.n && ok; ++y)
                    for (int x = 0; x < y && ok; ++x) {
                        if ((x == std::min(v1, v2) && y == std::max(v1, v2)) ||
                            (x == std::min(v1, v3) && y == std::max(v1, v3)) ||
                            (x == std::min(v2, v3) && y == std::max(v2, v3)))
                            continue;
                        Color col = c.color(x, y);
                        bool at_v1 = (x == v1 || y == v1);
                        if (at_v1 && col == e) continue;
                        if (col == b || col == cc || col == e) { ok = false; break; }
                        if (base == 0) base = col;
                        else if (base != col) ok = false;
                    }
                if (ok && base != 0) {
                    found_d = true;
                    cases.push_back({'d',
                                     {{"v1", v1}, {"v2", v2}, {"v3", v3},
                                      {"colors", {base, b, cc, e}}}});
                }
            }
        }

    // (e): E^b between {v1v2} and {v1v2, v3v4}; E^c = {v1v3, v2v4};
    // E^e = {v1v4, v2v3}; everything else in one further color
    bool found_e = false;
    std::vector<int> verts(c.n);
    std::iota(verts.begin(), verts.end(), 0);
    std::function<void(std::vector<int>&, int)> try_quads = [&](std::vector<int>& quad, int depth) {
        if (found_e) return;
        if (depth == 4) {
            int v1 = quad[0], v2 = quad[1], v3 = quad[2], v4 = quad[3];
            Color b = c.color(v1, v2);
            Color cc = c.color(v1, v3);
            Color e = c.color(v1, v4);
            if (b == cc || b == e || cc == e) return;
            if (c.color(v2, v4) != cc || c.color(v2, v3) != e) return;
            Color v34 = c.color(v3, v4);
            Color base = 0;
            auto special = [&](int x, int y) {
                auto same = [](int a1, int b1, int a2, int b2) {
                    return std::minmax(a1, b1) == std::minmax(a2, b2);
                };
                return same(x, y, v1, v2) || same(x, y, v1, v3) || same(x, y, v1, v4) ||
                       same(x, y, v2, v3) || same(x, y, v2, v4) || same(x, y, v3, v4);
            };
            for (int y = 1; y < c.n; ++y)
                for (int x = 0; x < y; ++x) {
                    if (special(x, y)) continue;
                    Color col = c.color(x, y);
                    if (col == b || col == cc || col == e) return;
                    if (base == 0) base = col;
                    else if (base != col) return;
                }
            if (base == 0) return;
            if (v34 != b && v34 != base) return;
            found_e = true;
            cases.push_back({'e',
                             {{"v1", v1}, {"v2", v2}, {"v3", v3}, {"v4", v4},
                              {"colors", {base, b, cc, e}}}});
            return;
        }
        for (int v : verts) {
            if (std::find(quad.begin(), quad.begin() + depth, v) != quad.begin() + depth) continue;
            quad[depth] = v;
            try_quads(quad, depth + 1);
            if (found_e) return;
        }
    };
    std::vector<int> quad(4);
    try_quads(quad, 0);

    // (f): the sporadic 4-colored K_5
    if (c.n == 5) {
        std::vector<int> perm{0, 1, 2, 3, 4};
        do {
            int v1 = perm[0], v2 = perm[1], v3 = perm[2], v4 = perm[3], v5 = perm[4];
            Color c1 = c.color(v1, v4);
            if (c.color(v1, v5) != c1 || c.color(v2, v3) != c1) continue;
            Color c2 = c.color(v2, v4);
            if (c.color(v2, v5) != c2 || c.color(v1, v3) != c2) continue;
            Color c3 = c.color(v3, v4);
            if (c.color(v3, v5) != c3 || c.color(v1, v2) != c3) continue;
            Color c4 = c.color(v4, v5);
            std::set<Color> distinct{c1, c2, c3, c4};
            if (distinct.size() != 4) continue;
            cases.push_back({'f', {{"vertices", perm}, {"colors", {c1, c2, c3, c4}}}});
            break;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    if (cases.empty())
        throw StructuralError("rainbow-P5-free coloring matches no case; "
                              "this contradicts the structure theorem");
    return cases;
}

// One applicable case of the rainbow-K13-free analysis: (a) k <= 2 or n <= 3,
// (b) k = 3 and the coloring is a G_1(n) member, (c) k >= 4 with a dominant
// color.
inline StructureCase classify_rainbow_k13_free(const EdgeColoring& c) {
    for (int v = 0; v < c.n; ++v)
        if (c.color_degree(v) >= 3) {
            // witness: the vertex plus three distinctly colored incident edges
            std::vector<int> w{v};
            std::set<Color> seen;
            for (int u = 0; u < c.n && seen.size() < 3; ++u) {
                if (u == v) continue;
                if (seen.insert(c.color(u, v)).second) w.push_back(u);
            }
            throw StructuralError("rainbow K_{1,3} present", w);
        }
    auto used = c.used_colors();
    int k = static_cast<int>(used.size());
    if (k <= 2 || c.n <= 3)
        return {'a', {{"colors_used", used}, {"n", c.n}}};

    if (k == 3) {
        if (c.n > 10) throw std::invalid_argument("G_1 recovery supports n <= 10");
        // search the tri-partition and the bijection of colors onto roles
        std::vector<Color> roles(used.begin(), used.end());
        std::sort(roles.begin(), roles.end());
        do {
            // roles[i] plays color i+1 in the family definition
            auto role_of = [&](Color col) {
                for (int i = 0; i < 3; ++i)
                    if (roles[i] == col) return i + 1;
                return 0;
            };
            std::vector<int> part(c.n, 0);
            std::function<bool(int)> assign = [&](int v) -> bool {
                if (v == c.n) {
                    std::array<int, 3> sizes{0, 0, 0};
                    for (int x = 0; x < c.n; ++x) ++sizes[part[x]];
                    int nonempty = (sizes[0] > 0) + (sizes[1] > 0) + (sizes[2] > 0);
                    return nonempty >= 2;
                }
                for (int p = 0; p < 3; ++p) {
                    part[v] = p;
                    bool ok = true;
                    for (int u = 0; u < v && ok; ++u) {
                        int r = role_of(c.color(u, v));
                        int pu = part[u], pv = p;
                        if (pu == pv) {
                            // inside V_{i+1}: colors i or i+1 (cyclic, 1-based)
                            int within = pu + 1;            // V_1 -> 1 ...
                            int lo = within == 1 ? 3 : within - 1;
                            ok = (r == within || r == lo);
                        } else {
                            int a = std::min(pu, pv), b = std::max(pu, pv);
                            int need = (a == 0 && b == 1) ? 1 : (a == 1 && b == 2) ? 2 : 3;
                            ok = (r == need);
                        }
                    }
                    if (ok && assign(v + 1)) return true;
                }
                part[v] = 0;
                return false;
            };
            if (assign(0)) {
                std::array<std::vector<int>, 3> parts;
                for (int v = 0; v < c.n; ++v) parts[part[v]].push_back(v);
                return {'b',
                        {{"V1", parts[0]}, {"V2", parts[1]}, {"V3", parts[2]},
                         {"color_roles", roles}}};
            }
        } while (std::next_permutation(roles.begin(), roles.end()));
        throw StructuralError("3-colored rainbow-K13-free coloring is not a G_1 member; "
                              "this contradicts the structure theorem");
    }

    for (Color d : used)
        if (auto w = detail::dominant_color_witness(c, d)) return {'c', *w};
    throw StructuralError("rainbow-K13-free coloring with k >= 4 has no dominant color; "
                          "this contradicts the structure theorem");
}

// ---- local colorings ----

struct LocalPartition {
    std::string shape; // "trivial", "m = k+1", or "m >= k+2"
    int total_colors = 0;
    std::map<std::vector<Color>, std::vector<int>> classes; // color set -> vertices
};

// Partition of a locally k-colored K_n into classes indexed by k-sets of
// colors, each vertex's color neighborhood inside its class set. Vertices
// with fewer than k incident colors go to the lexicographically smallest
// admissible class.
inline LocalPartition local_partition(const EdgeColoring& c, int k) {
    for (int v = 0; v < c.n; ++v)
        if (c.color_degree(v) > k)
            throw StructuralError("not a local " + std::to_string(k) + "-coloring", {v});
    auto used = c.used_colors();
    int m = static_cast<int>(used.size());
    LocalPartition lp;
    lp.total_colors = m;

    if (m <= k) {
        lp.shape = "trivial";
        std::vector<int> all(c.n);
        std::iota(all.begin(), all.end(), 0);
        lp.classes[used] = all;
        return lp;
    }

    // candidate class color-sets, lexicographically ordered
    std::vector<std::vector<Color>> family;
    if (m == k + 1) {
        lp.shape = "m = k+1";
        // all k-subsets of the k+1 used colors
        std::vector<int> idx(k);
        std::function<void(int, int)> gen = [&](int start, int depth) {
            if (depth == k) {
                std::vector<Color> s;
                for (int i : idx) s.push_back(used[i]);
                family.push_back(s);
                return;
            }
            for (int i = start; i <= m - (k - depth); ++i) {
                idx[depth] = i;
                gen(i + 1, depth + 1);
            }
        };
        gen(0, 0);
    } else {
        lp.shape = "m >= k+2";
        // common (k-1)-set D: every color neighborhood fits inside D + one color
        std::vector<int> idx(k - 1);
        std::optional<std::vector<Color>> common;
        std::function<bool(int, int)> try_d = [&](int start, int depth) -> bool {
            if (depth == k - 1) {
                std::vector<Color> d;
                for (int i : idx) d.push_back(used[i]);
                for (int v = 0; v < c.n; ++v) {
                    auto cn = c.color_neighborhood(v);
                    std::vector<Color> outside;
                    for (Color col : cn)
                        if (std::find(d.begin(), d.end(), col) == d.end()) outside.push_back(col);
                    if (outside.size() > 1) return false;
                }
                common = d;
                return true;
            }
            for (int i = start; i <= m - (k - 1 - depth); ++i) {
                idx[depth] = i;
                if (try_d(i + 1, depth + 1)) return true;
            }
            return false;
        };
        if (!try_d(0, 0))
            throw StructuralError("no common (k-1)-set of colors; "
                                  "this contradicts the partition theorem");
        for (Color col : used) {
            if (std::find(common->begin(), common->end(), col) != common->end()) continue;
            std::vector<Color> s = *common;
            s.push_back(col);
            std::sort(s.begin(), s.end());
            family.push_back(s);
        }
        std::sort(family.begin(), family.end());
    }

    for (int v = 0; v < c.n; ++v) {
        auto cn = c.color_neighborhood(v);
        bool placed = false;
        for (const auto& s : family) {
            if (std::includes(s.begin(), s.end(), cn.begin(), cn.end())) {
                lp.classes[s].push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed)
            throw StructuralError("vertex color neighborhood fits no class; "
                                  "this contradicts the partition theorem",
                                  {v});
    }
    return lp;
}

// ---- small-host observation ----

struct ObservationReport {
    int colors_used = 0;
    bool in_range = false;   // the observation covers 2 <= i <= 4
    bool clause_holds = false;
    std::string detail;
};

// On K_4 with a monochromatic 2-matching: 2 colors force a monochromatic C_4
// or P_4; 3 colors force >= 2 rainbow triangles; 4 colors force >= 3.
inline ObservationReport observation_checks(const EdgeColoring& c) {
    if (c.n != 4) throw std::invalid_argument("observation check needs n = 4");
    if (!has_monochromatic_any_color(c, SubgraphPattern::matching(2)))
        throw std::invalid_argument("host has no monochromatic 2-matching");
    ObservationReport r;
    r.colors_used = static_cast<int>(c.used_colors().size());
    if (r.colors_used < 2 || r.colors_used > 4) {
        r.detail = "observation covers 2..4 colors";
        return r;
    }
    r.in_range = true;
    if (r.colors_used == 2) {
        auto c4 = SubgraphPattern::arbitrary({{0, 1}, {1, 2}, {2, 3}, {0, 3}});
        bool hit = has_monochromatic_any_color(c, c4) ||
                   has_monochromatic_any_color(c, SubgraphPattern::path(4));
        r.clause_holds = hit;
        r.detail = hit ? "monochromatic C4 or P4 found" : "no monochromatic C4 or P4";
    } else {
        long long rt = count_rainbow(c, SubgraphPattern::triangle());
        long long need = r.colors_used == 3 ? 2 : 3;
        r.clause_holds = rt >= need;
        r.detail = "rainbow triangles: " + std::to_string(rt) + ", need >= " + std::to_string(need);
    }
    return r;
}

inline nlohmann::json to_json(const GallaiPartition& gp) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : gp.parts) parts.push_back(p);
    nlohmann::json reduced = nlohmann::json::array();
    for (const auto& [pair, col] : gp.reduced)
        reduced.push_back({pair.first, pair.second, col});
    return {{"parts", parts},
            {"reduced", reduced},
            {"reduced_colors", std::vector<Color>(gp.reduced_colors.begin(), gp.reduced_colors.end())}};
}

inline nlohmann::json to_json(const StructureCase& sc) {
    return {{"case", std::string(1, sc.id)}, {"witness", sc.witness}};
}

inline nlohmann::json to_json(const LocalPartition& lp) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& [colors, verts] : lp.classes)
        classes.push_back({{"colors", colors}, {"vertices", verts}});
    return {{"shape", lp.shape}, {"total_colors", lp.total_colors}, {"classes", classes}};
}

} // namespace gallai
