#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <gallai/canonical.hpp>
#include <gallai/constructions.hpp>
#include <gallai/core.hpp>

using namespace gallai;

TEST_CASE("build_coloring basics") {
    auto k2 = build_coloring(2, {{0, 1, 1}});
    CHECK(k2.n == 2);
    CHECK(k2.k == 1);
    CHECK(k2.is_exact());

    auto rainbow = build_coloring(3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}});
    CHECK(rainbow.k == 3);
    CHECK(rainbow.is_exact());
    CHECK(find_rainbow_triangle(rainbow).has_value());

    CHECK_THROWS_AS(build_coloring(3, {{0, 1, 1}, {0, 2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(build_coloring(3, {{0, 1, 1}, {0, 1, 2}, {1, 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(build_coloring(2, {{0, 1, 0}}), std::invalid_argument);
}

TEST_CASE("color degree and neighborhood") {
    auto rainbow = build_coloring(3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}});
    for (int v = 0; v < 3; ++v) CHECK(rainbow.color_degree(v) == 2);

    auto mono4 = monochromatic_complete(4);
    for (int v = 0; v < 4; ++v) CHECK(mono4.color_degree(v) == 1);

    // internal edges of the big part carry color 1, the two between-part
    // colors 2 and 3 complete the neighborhood
    auto blowup = construct_cyclic_blowup_3col(2);
    REQUIRE(blowup.n == 5);
    CHECK(blowup.color_degree(0) == 3);
    CHECK(blowup.color_neighborhood(0) == std::vector<Color>{1, 2, 3});

    CHECK_THROWS_AS(rainbow.color_degree(5), std::out_of_range);
}

TEST_CASE("color class views match V^j definition") {
    auto c = build_coloring(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 2}, {1, 2, 1}, {1, 3, 2}, {2, 3, 3}});
    auto view = color_class(c, 2);
    CHECK(view.edges == std::vector<std::pair<int, int>>{{0, 3}, {1, 3}});
    CHECK(view.vertices == std::vector<int>{0, 1, 3});
    auto empty = color_class(c, 7);
    CHECK(empty.edges.empty());
    CHECK(empty.vertices.empty());
}

TEST_CASE("interchange JSON round trip") {
    auto c = construct_g1(5, {3, 1, 1});
    auto j = to_json(c);
    auto back = coloring_from_json(j);
    CHECK(back == c);
    CHECK(j.at("n").get<int>() == 5);
    for (const auto& e : j.at("edges")) {
        CHECK(e[0].get<int>() < e[1].get<int>());
        CHECK(e[2].get<int>() >= 1);
    }
}

TEST_CASE("canonical keys identify orbits") {
    auto r1 = build_coloring(3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}});
    auto r2 = build_coloring(3, {{0, 1, 3}, {0, 2, 1}, {1, 2, 2}});
    CHECK(canonical_key(r1) == canonical_key(r2));

    auto mono = monochromatic_complete(4, 1, 2);
    auto off = build_coloring(4, {{0, 1, 2}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    CHECK(canonical_key(mono) != canonical_key(off));
}

TEST_CASE("canonical key is invariant under random relabelings") {
    auto base = construct_g1(4, {2, 1, 1});
    auto key = canonical_key(base);
    std::mt19937 rng(7);
    std::vector<int> perm{0, 1, 2, 3};
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::tuple<int, int, Color>> assignments;
        for (int v = 1; v < 4; ++v)
            for (int u = 0; u < v; ++u)
                assignments.emplace_back(perm[u], perm[v], base.color(u, v));
        auto relabeled = build_coloring(4, assignments, base.k);
        CHECK(canonical_key(relabeled) == key);
    }
}

TEST_CASE("rgs relabel is idempotent and canonical reps are rgs") {
    auto c = build_coloring(4, {{0, 1, 3}, {0, 2, 3}, {0, 3, 1}, {1, 2, 2}, {1, 3, 2}, {2, 3, 1}});
    auto r = rgs_relabel(c);
    CHECK(is_rgs(r));
    CHECK(rgs_relabel(r) == r);
    auto rep = canonical_representative(c);
    CHECK(is_rgs(rep));
    CHECK(is_canonical(rep));
    CHECK(canonical_key(rep) == canonical_key(c));
}
