#pragma once

// Canonical forms for edge-colorings under color permutation and under the
// full group (vertex relabeling x color permutation).
//
// Color canonicalization is restricted-growth relabeling in colex edge order:
// the first edge gets color 1 and each newly seen color gets the smallest
// unused value. The full-canonical key is the lexicographically smallest
// restricted-growth vector over all vertex relabelings, found by a
// branch-and-prune walk over partial vertex images; feasible for n <= 10.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "core.hpp"

namespace gallai {

// relabel colors to restricted-growth form in colex edge order
inline EdgeColoring rgs_relabel(const EdgeColoring& c) {
    EdgeColoring out(c.n, c.k);
    std::vector<int> map(c.k + 1, 0);
    int next = 0;
    for (std::size_t r = 0; r < c.chi.size(); ++r) {
        int col = c.chi[r];
        if (map[col] == 0) map[col] = ++next;
        out.chi[r] = static_cast<std::uint8_t>(map[col]);
    }
    out.k = c.k; // palette size unchanged; used colors are now 1..next
    return out;
}

inline bool is_rgs(const EdgeColoring& c) {
    int maxseen = 0;
    for (auto col : c.chi) {
        if (col > maxseen + 1) return false;
        maxseen = std::max(maxseen, static_cast<int>(col));
    }
    return true;
}

namespace detail {

// Walks vertex images position by position; at position j the edge block
// (0,j),(1,j),...,(j-1,j) becomes comparable against `ref` after on-the-fly
// restricted-growth relabeling. mode=false: stop as soon as any permutation
// beats ref (is_canonical test). mode=true: track the global minimum.
struct CanonicalSearch {
    const EdgeColoring& c;
    std::vector<std::uint8_t> ref;  // current best / reference vector
    std::vector<int> image;         // image[j] = original vertex playing role j
    std::vector<char> used;
    std::vector<int> cmap;          // original color -> relabeled color
    int next_color = 0;
    bool found_smaller = false;
    bool minimize;

    CanonicalSearch(const EdgeColoring& col, std::vector<std::uint8_t> reference, bool min_mode)
        : c(col), ref(std::move(reference)), image(col.n, -1), used(col.n, 0),
          cmap(col.k + 1, 0), minimize(min_mode) {}

    void run() { place(0); }

    void place(int j) {
        if (j == c.n) {
            if (minimize) found_smaller = true; // ref already updated in-place
            return;
        }
        for (int w = 0; w < c.n && !(found_smaller && !minimize); ++w) {
            if (used[w]) continue;
            image[j] = w;
            used[w] = 1;

            // evaluate edge block of position j against ref
            std::array<int, 16> touched{}; // colors first mapped in this block
            int touched_count = 0;
            int saved_next = next_color;
            int cmp = 0; // -1 smaller, 0 equal so far, +1 larger
            int base = edge_rank(0, j);
            std::array<std::uint8_t, 16> block{};
            for (int i = 0; i < j; ++i) {
                int orig = c.color(image[i], w);
                if (cmap[orig] == 0) {
                    cmap[orig] = ++next_color;
                    touched[touched_count++] = orig;
                }
                int val = cmap[orig];
                block[i] = static_cast<std::uint8_t>(val);
                if (cmp == 0) {
                    if (val < ref[base + i]) { cmp = -1; }
                    else if (val > ref[base + i]) { cmp = 1; break; }
                }
            }

            bool descend = false;
            if (cmp < 0) {
                if (!minimize) {
                    found_smaller = true;
                } else {
                    // strictly better prefix: rewrite ref from here on with this
                    // branch's values and keep searching below it
                    for (int i = 0; i < j; ++i) ref[base + i] = block[i];
                    for (std::size_t r = base + j; r < ref.size(); ++r) ref[r] = 255;
                    descend = true;
                }
            } else if (cmp == 0) {
                descend = true;
            }
            if (descend) place(j + 1);

            for (int t = 0; t < touched_count; ++t) cmap[touched[t]] = 0;
            next_color = saved_next;
            used[w] = 0;
            image[j] = -1;
            if (found_smaller && !minimize) return;
        }
    }
};

} // namespace detail

// Total-order key invariant under vertex relabeling and color permutation.
// Equal keys iff the colorings are equivalent under that group.
inline std::vector<std::uint8_t> canonical_key(const EdgeColoring& c) {
    if (c.n > 12) throw std::invalid_argument("canonical_key supports n <= 12");
    EdgeColoring start = rgs_relabel(c);
    detail::CanonicalSearch search(c, start.chi, true);
    search.run();
    return search.ref;
}

inline EdgeColoring canonical_representative(const EdgeColoring& c) {
    EdgeColoring out(c.n, c.k);
    out.chi = canonical_key(c);
    return out;
}

// c must already be in restricted-growth form; true iff no relabeling of
// vertices yields a lexicographically smaller restricted-growth vector
inline bool is_canonical(const EdgeColoring& c) {
    detail::CanonicalSearch search(c, c.chi, false);
    search.run();
    return !search.found_smaller;
}

inline std::string canonical_key_string(const EdgeColoring& c) {
    auto key = canonical_key(c);
    std::string s;
    s.reserve(key.size() + 8);
    s += std::to_string(c.n);
    s += ':';
    for (auto b : key) s += static_cast<char>('0' + b);
    return s;
}

} // namespace gallai
