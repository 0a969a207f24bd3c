#pragma once

// Exhaustive enumeration of edge-colorings of K_n with optional symmetry
// reduction:
//
//   labeled          every assignment chi : E -> {1..max_colors}
//   color_canonical  restricted-growth strings in colex edge order, one
//                    representative per color-permutation orbit
//   full_canonical   one representative per orbit of vertex relabeling x
//                    color permutation, generated by extending canonical
//                    colorings one vertex at a time (the colex prefix of a
//                    canonical coloring is canonical, so each level gates on
//                    is_canonical and nothing is generated twice)
//
// Enumerators take a visitor (return false to stop) and an optional prefix
// predicate called after each edge assignment; returning false prunes the
// whole subtree. Predicates must be hereditary for the enumeration to stay
// exhaustive: once false, no extension may satisfy them.

#include <functional>
#include <optional>

#include "canonical.hpp"
#include "core.hpp"

namespace gallai {

enum class Exactness { exact, at_most };
enum class Symmetry { labeled, color_canonical, full_canonical };

struct EnumerationSpec {
    int n = 2;
    int max_colors = 1;
    Exactness exactness = Exactness::exact;
    Symmetry symmetry = Symmetry::color_canonical;
    std::optional<int> local_bound; // per-vertex cap on color degree
};

namespace detail {

inline bool local_bound_ok(const EdgeColoring& partial, int u, int v, int bound) {
    // color degree over the assigned colex prefix (ranks <= rank(u,v))
    int limit = edge_rank(std::min(u, v), std::max(u, v));
    auto degree_at = [&](int x) {
        std::vector<char> seen(partial.k + 1, 0);
        int d = 0;
        for (int w = 0; w < partial.n; ++w) {
            if (w == x) continue;
            int a = std::min(x, w), b = std::max(x, w);
            if (edge_rank(a, b) > limit) continue;
            int col = partial.chi[edge_rank(a, b)];
            if (col != 0 && !seen[col]) { seen[col] = 1; ++d; }
        }
        return d;
    };
    return degree_at(u) <= bound && degree_at(v) <= bound;
}

inline EdgeColoring prefix_coloring(const EdgeColoring& c, int m) {
    EdgeColoring out(m, c.k);
    std::copy(c.chi.begin(), c.chi.begin() + pair_count(m), out.chi.begin());
    return out;
}

// DFS over edge ranks [lo, total) with per-edge color choices.
// rgs: cap new colors at max_used+1. Returns false if the visitor stopped.
template <typename Visit, typename PrefixOk>
bool edge_dfs(EdgeColoring& c, int rank, int max_colors, bool rgs, int max_used,
              Exactness exactness, const std::optional<int>& local_bound,
              Visit&& visit, PrefixOk&& prefix_ok) {
    int total = c.edge_count();
    if (rank == total) {
        if (exactness == Exactness::exact) {
            int used = 0;
            if (rgs) {
                used = max_used;
            } else {
                std::vector<char> seen(max_colors + 1, 0);
                for (auto col : c.chi) if (!seen[col]) { seen[col] = 1; ++used; }
            }
            if (used != max_colors) return true;
        }
        return visit(const_cast<const EdgeColoring&>(c));
    }
    // exactness pruning: not enough edges left to introduce missing colors
    if (exactness == Exactness::exact && rgs && max_colors - max_used > total - rank) return true;
    auto [u, v] = edge_of_rank(rank);
    int hi = rgs ? std::min(max_colors, max_used + 1) : max_colors;
    for (int col = 1; col <= hi; ++col) {
        c.chi[rank] = static_cast<std::uint8_t>(col);
        if (local_bound && !local_bound_ok(c, u, v, *local_bound)) continue;
        if (!prefix_ok(const_cast<const EdgeColoring&>(c), u, v)) continue;
        if (!edge_dfs(c, rank + 1, max_colors, rgs, std::max(max_used, col), exactness,
                      local_bound, visit, prefix_ok))
            return false;
    }
    c.chi[rank] = 0;
    return true;
}

// Extend canonical colorings of K_m to K_{m+1}: assign the colex block
// (0,m),(1,m),...,(m-1,m), then gate on canonicity of the grown prefix.
template <typename Visit, typename PrefixOk>
bool canonical_extend(EdgeColoring& c, int m, int n, int max_colors, int max_used,
                      Exactness exactness, const std::optional<int>& local_bound,
                      Visit&& visit, PrefixOk&& prefix_ok) {
    if (m == n) {
        if (exactness == Exactness::exact && max_used != max_colors) return true;
        return visit(const_cast<const EdgeColoring&>(c));
    }
    int remaining = pair_count(n) - pair_count(m);
    if (exactness == Exactness::exact && max_colors - max_used > remaining) return true;

    // DFS over the new block
    std::function<bool(int, int)> assign = [&](int i, int used) -> bool {
        if (i == m) {
            EdgeColoring prefix = prefix_coloring(c, m + 1);
            if (!is_canonical(prefix)) return true;
            return canonical_extend(c, m + 1, n, max_colors, used, exactness, local_bound,
                                    visit, prefix_ok);
        }
        int hi = std::min(max_colors, used + 1);
        int rank = edge_rank(i, m);
        for (int col = 1; col <= hi; ++col) {
            c.chi[rank] = static_cast<std::uint8_t>(col);
            if (local_bound && !local_bound_ok(c, i, m, *local_bound)) continue;
            if (!prefix_ok(const_cast<const EdgeColoring&>(c), i, m)) continue;
            if (!assign(i + 1, std::max(used, col))) return false;
        }
        c.chi[rank] = 0;
        return true;
    };
    return assign(0, max_used);
}

struct AcceptAll {
    bool operator()(const EdgeColoring&, int, int) const { return true; }
};

} // namespace detail

// Yields each coloring satisfying the spec exactly once. The visitor returns
// false to stop; the function returns false iff the visitor stopped early.
template <typename Visit, typename PrefixOk>
bool enumerate_colorings(const EnumerationSpec& spec, Visit&& visit, PrefixOk&& prefix_ok) {
    if (spec.n < 1 || spec.max_colors < 1) throw std::invalid_argument("need n >= 1, max_colors >= 1");
    EdgeColoring c(spec.n, spec.max_colors);
    if (c.edge_count() == 0) {
        if (spec.exactness == Exactness::at_most) return visit(const_cast<const EdgeColoring&>(c));
        return true; // no exact k-coloring of an edgeless host
    }
    switch (spec.symmetry) {
    case Symmetry::labeled:
        return detail::edge_dfs(c, 0, spec.max_colors, false, 0, spec.exactness,
                                spec.local_bound, visit, prefix_ok);
    case Symmetry::color_canonical:
        return detail::edge_dfs(c, 0, spec.max_colors, true, 0, spec.exactness,
                                spec.local_bound, visit, prefix_ok);
    case Symmetry::full_canonical:
        return detail::canonical_extend(c, 1, spec.n, spec.max_colors, 0, spec.exactness,
                                        spec.local_bound, visit, prefix_ok);
    }
    return true;
}

template <typename Visit>
bool enumerate_colorings(const EnumerationSpec& spec, Visit&& visit) {
    return enumerate_colorings(spec, visit, detail::AcceptAll{});
}

inline std::vector<EdgeColoring> collect_colorings(const EnumerationSpec& spec) {
    std::vector<EdgeColoring> out;
    enumerate_colorings(spec, [&](const EdgeColoring& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

// Color-canonical representatives of all colorings (any number of colors) in
// which every vertex is incident to at most k distinct colors. The total
// color count is bounded by C(n,2), then restricted growth collapses the
// unbounded alphabet.
template <typename Visit>
bool enumerate_local_colorings(int n, int k, Visit&& visit) {
    if (n < 2 || k < 1) throw std::invalid_argument("need n >= 2, k >= 1");
    EnumerationSpec spec;
    spec.n = n;
    spec.max_colors = pair_count(n);
    spec.exactness = Exactness::at_most;
    spec.symmetry = Symmetry::color_canonical;
    spec.local_bound = k;
    return enumerate_colorings(spec, visit);
}

inline long long count_colorings(const EnumerationSpec& spec) {
    long long n = 0;
    enumerate_colorings(spec, [&](const EdgeColoring&) {
        ++n;
        return true;
    });
    return n;
}

} // namespace gallai
