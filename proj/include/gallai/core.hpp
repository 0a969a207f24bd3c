#pragma once

// Edge-colorings of complete graphs K_n, stored as a flat triangular array.
// Vertices are 0..n-1, colors are 1..k. Edges are ordered colexicographically:
// (0,1),(0,2),(1,2),(0,3),... so the first C(m,2) entries are exactly the
// coloring induced on the first m vertices.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace gallai {

using Color = int;

inline int pair_count(int n) { return n * (n - 1) / 2; }

// colex rank of the edge {u,v}, u < v
inline int edge_rank(int u, int v) { return v * (v - 1) / 2 + u; }

inline std::pair<int, int> edge_of_rank(int r) {
    int v = 1;
    while (edge_rank(0, v + 1) <= r) ++v;
    return {r - edge_rank(0, v), v};
}

struct EdgeColoring {
    int n = 0;
    int k = 0;                     // colors available, 1..k
    std::vector<std::uint8_t> chi; // chi[edge_rank(u,v)] in 1..k

    EdgeColoring() = default;
    EdgeColoring(int n_, int k_) : n(n_), k(k_), chi(pair_count(n_), 0) {}

    Color color(int u, int v) const {
        if (u > v) std::swap(u, v);
        return chi[edge_rank(u, v)];
    }
    void set_color(int u, int v, Color c) {
        if (u > v) std::swap(u, v);
        chi[edge_rank(u, v)] = static_cast<std::uint8_t>(c);
    }

    int edge_count() const { return pair_count(n); }

    bool operator==(const EdgeColoring& o) const { return n == o.n && k == o.k && chi == o.chi; }
    bool operator!=(const EdgeColoring& o) const { return !(*this == o); }

    // colors that actually appear on edges
    std::vector<Color> used_colors() const {
        std::vector<char> seen(k + 1, 0);
        for (auto c : chi) if (c >= 1 && c <= k) seen[c] = 1;
        std::vector<Color> out;
        for (Color c = 1; c <= k; ++c) if (seen[c]) out.push_back(c);
        return out;
    }

    // "exact": every color 1..k appears on at least one edge
    bool is_exact() const { return static_cast<int>(used_colors().size()) == k; }

    // distinct colors incident to v
    std::vector<Color> color_neighborhood(int v) const {
        if (v < 0 || v >= n) throw std::out_of_range("vertex out of range");
        std::vector<char> seen(k + 1, 0);
        for (int u = 0; u < n; ++u) if (u != v) seen[color(u, v)] = 1;
        std::vector<Color> out;
        for (Color c = 1; c <= k; ++c) if (seen[c]) out.push_back(c);
        return out;
    }

    int color_degree(int v) const { return static_cast<int>(color_neighborhood(v).size()); }

    int max_color_degree() const {
        int m = 0;
        for (int v = 0; v < n; ++v) m = std::max(m, color_degree(v));
        return m;
    }
};

// E^j and V^j for one color class
struct ColorClassView {
    Color color;
    std::vector<std::pair<int, int>> edges; // u < v
    std::vector<int> vertices;              // endpoints of edges, sorted
};

inline ColorClassView color_class(const EdgeColoring& c, Color j) {
    ColorClassView view;
    view.color = j;
    std::vector<char> touched(c.n, 0);
    for (int v = 1; v < c.n; ++v)
        for (int u = 0; u < v; ++u)
            if (c.color(u, v) == j) {
                view.edges.emplace_back(u, v);
                touched[u] = touched[v] = 1;
            }
    for (int v = 0; v < c.n; ++v) if (touched[v]) view.vertices.push_back(v);
    return view;
}

inline EdgeColoring build_coloring(int n, const std::vector<std::tuple<int, int, Color>>& assignments,
                                   std::optional<int> k_override = std::nullopt) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    EdgeColoring c(n, 0);
    std::vector<char> assigned(pair_count(n), 0);
    int kmax = 0;
    for (auto [u, v, col] : assignments) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n || u == v)
            throw std::invalid_argument("bad vertex pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (col < 1) throw std::invalid_argument("colors must be at least 1");
        int r = edge_rank(u, v);
        if (assigned[r])
            throw std::invalid_argument("pair (" + std::to_string(u) + "," + std::to_string(v) + ") assigned twice");
        assigned[r] = 1;
        c.chi[r] = static_cast<std::uint8_t>(col);
        kmax = std::max(kmax, col);
    }
    for (int r = 0; r < pair_count(n); ++r)
        if (!assigned[r]) {
            auto [u, v] = edge_of_rank(r);
            throw std::invalid_argument("pair (" + std::to_string(u) + "," + std::to_string(v) + ") missing");
        }
    c.k = k_override.value_or(kmax);
    if (c.k < kmax) throw std::invalid_argument("k override below maximum used color");
    return c;
}

inline EdgeColoring monochromatic_complete(int n, Color col = 1, int k = 0) {
    EdgeColoring c(n, std::max(k, col));
    std::fill(c.chi.begin(), c.chi.end(), static_cast<std::uint8_t>(col));
    return c;
}

// ---- interchange JSON: {"n":int, "k":int, "edges":[[u,v,color],...]} ----

inline nlohmann::json to_json(const EdgeColoring& c) {
    nlohmann::json edges = nlohmann::json::array();
    for (int v = 1; v < c.n; ++v)
        for (int u = 0; u < v; ++u)
            edges.push_back({u, v, c.color(u, v)});
    return nlohmann::json{{"n", c.n}, {"k", c.k}, {"edges", edges}};
}

inline EdgeColoring coloring_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("coloring JSON needs \"n\" and \"edges\"");
    int n = j.at("n").get<int>();
    std::vector<std::tuple<int, int, Color>> assignments;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3) throw std::invalid_argument("edge entries must be [u,v,color]");
        assignments.emplace_back(e[0].get<int>(), e[1].get<int>(), e[2].get<Color>());
    }
    std::optional<int> k;
    if (j.contains("k")) k = j.at("k").get<int>();
    return build_coloring(n, assignments, k);
}

// first rainbow triangle in colex order, if any
inline std::optional<std::array<int, 3>> find_rainbow_triangle(const EdgeColoring& c) {
    for (int w = 2; w < c.n; ++w)
        for (int v = 1; v < w; ++v)
            for (int u = 0; u < v; ++u) {
                Color a = c.color(u, v), b = c.color(u, w), d = c.color(v, w);
                if (a != b && a != d && b != d) return std::array<int, 3>{u, v, w};
            }
    return std::nullopt;
}

// structural precondition failure (e.g. a rainbow triangle where none is allowed)
struct StructuralError : std::runtime_error {
    std::vector<int> witness;
    explicit StructuralError(const std::string& msg, std::vector<int> w = {})
        : std::runtime_error(msg), witness(std::move(w)) {}
};

} // namespace gallai
