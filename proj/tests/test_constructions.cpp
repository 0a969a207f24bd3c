#include <catch2/catch_amalgamated.hpp>

#include <gallai/constructions.hpp>
#include <gallai/patterns.hpp>

using namespace gallai;

TEST_CASE("host orders match the size bookkeeping") {
    for (int n = 2; n <= 5; ++n) CHECK(construct_cyclic_blowup_3col(n).n == 4 * n - 3);
    CHECK(construct_dominant_matching(4, 4).n == 7);
    CHECK(construct_dominant_matching(4, 3).n == 5); // degenerate big part of order 1
    CHECK(construct_cone(5, 3).n == 6);
    CHECK(construct_dominant_big(4, 5).n == 13);
    CHECK(construct_dominant_big(5, 7).n == 19); // parts 13, 2, 2, 2
    CHECK(construct_gm3_k13(2).n == 6);
    CHECK(construct_gm3_k13(3).n == 10);
    CHECK(construct_stripes_multiplicity({2, 2}).n == 5);
    CHECK(construct_stripes_multiplicity({3, 2}).n == 7);
    CHECK(construct_stripes_multiplicity({2, 2, 2}).n == 6);
    CHECK(construct_sequential_cones(6).n == 9);
    CHECK(construct_sequential_cones(2).n == 5);
    CHECK(construct_gm_k3_matching(6, 2).n == 9);
    CHECK(construct_gm_k3_matching(3, 3).n == 10);
    CHECK(construct_gm_k3_matching(2, 2).n == 5);
    CHECK(construct_prop_k2n(5, 6).n == 12);  // equals 2n exactly when n = 2k-4
    CHECK(construct_prop_k2n(5, 4).n == 10);  // n + 2k - 4 in general
    CHECK(construct_thm_k3n1(5, 6).n == 17);
    CHECK(construct_lemcount(3).n == 4);
    CHECK(construct_lemcount(2).n == 2);
}

TEST_CASE("parameter range errors") {
    CHECK_THROWS_AS(construct_cyclic_blowup_3col(1), std::invalid_argument);
    CHECK_THROWS_AS(construct_cone(7, 3), std::invalid_argument); // 6 cone colors, 5 edges
    CHECK_THROWS_AS(construct_dominant_big(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(construct_g1(6, {2, 2, 1}), std::invalid_argument); // sizes mismatch
    CHECK_THROWS_AS(construct_g1(4, {4, 0, 0}), std::invalid_argument); // one nonempty part
    CHECK_THROWS_AS(construct_stripes_multiplicity({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(construct_prop_k2n(5, 7), std::invalid_argument);
    CHECK_THROWS_AS(construct_thm_k3n1(5, 5), std::invalid_argument);
}

TEST_CASE("cyclic blowup: the published claims fail on the instance") {
    // the lemma asserts no rainbow K_{1,3} and no monochromatic nK_2, but a
    // big-part vertex touches all three colors and the color-1 class spans
    // the big clique plus the small-part bridge
    auto rep = verify_construction("cyclic-blowup-3col", {{"n", 2}});
    REQUIRE(rep.coloring.n == 5);
    CHECK(!rep.all_hold());
    CHECK(count_rainbow(rep.coloring, SubgraphPattern::star(3)) == 6);
    long long mono = 0;
    for (Color col = 1; col <= 3; ++col)
        mono += count_monochromatic(rep.coloring, SubgraphPattern::matching(2), col);
    CHECK(mono == 3);
    // it does contain a rainbow triangle across the three parts
    CHECK(count_rainbow(rep.coloring, SubgraphPattern::triangle()) > 0);
    CHECK(rep.coloring.is_exact());
    // and the big-part color degree is 3
    CHECK(rep.coloring.color_degree(0) == 3);
}

TEST_CASE("dominant matching construction claims hold") {
    auto rep = verify_construction("dominant-matching", {{"k", 4}, {"n", 4}});
    CHECK(rep.in_stated_range);
    CHECK(rep.all_hold());
    CHECK(!has_rainbow(rep.coloring, SubgraphPattern::star(3)));
    CHECK(!has_monochromatic_any_color(rep.coloring, SubgraphPattern::matching(4)));

    auto degenerate = verify_construction("dominant-matching", {{"k", 4}, {"n", 3}});
    CHECK(!degenerate.in_stated_range);
}

TEST_CASE("cone construction claims hold") {
    auto rep = verify_construction("cone", {{"k", 5}, {"n", 3}});
    CHECK(rep.all_hold());
    CHECK(!has_rainbow(rep.coloring, SubgraphPattern::path(5)));
    CHECK(!has_monochromatic_any_color(rep.coloring, SubgraphPattern::matching(3)));
    CHECK(rep.coloring.is_exact());
}

TEST_CASE("dominant big construction claims hold") {
    auto rep = verify_construction("dominant-big", {{"k", 4}, {"n", 5}});
    CHECK(rep.all_hold());
    CHECK(!has_rainbow(rep.coloring, SubgraphPattern::path(5)));
    CHECK(!has_rainbow(rep.coloring, SubgraphPattern::star(3)));
    CHECK(!has_monochromatic_any_color(rep.coloring, SubgraphPattern::matching(5)));
}

TEST_CASE("G_1 family") {
    auto g1 = construct_g1(6, {2, 2, 2});
    CHECK(count_rainbow(g1, SubgraphPattern::star(3)) == 0);
    CHECK(g1.used_colors() == std::vector<Color>{1, 2, 3});

    auto one_empty = construct_g1(4, {2, 2, 0});
    CHECK(one_empty.n == 4);
    CHECK(count_rainbow(one_empty, SubgraphPattern::star(3)) == 0);

    auto exact3 = construct_g1(5, {3, 1, 1});
    CHECK(exact3.used_colors() == std::vector<Color>{1, 2, 3});

    // the seeded mixed mode stays inside the family (never a rainbow star)
    for (unsigned seed = 1; seed <= 10; ++seed) {
        auto mixed = construct_g1(6, {2, 2, 2}, seed);
        CHECK(count_rainbow(mixed, SubgraphPattern::star(3)) == 0);
    }
}

TEST_CASE("multiplicity witness for the rainbow star: published total fails") {
    auto rep = verify_construction("gm3-k13", {{"n", 2}});
    CHECK(!rep.all_hold());
    auto total = gm_total(rep.coloring, SubgraphPattern::star(3), SubgraphPattern::matching(2));
    CHECK(total.rainbow == 12);
    CHECK(total.mono_total == 9);
    CHECK(total.total == 21); // the published value is (2n-1)!! = 3

    // only colors 2 and 3 stay matching-free
    CHECK(count_monochromatic(rep.coloring, SubgraphPattern::matching(2), 2) == 0);
    CHECK(count_monochromatic(rep.coloring, SubgraphPattern::matching(2), 3) == 0);
}

TEST_CASE("stripes multiplicity witnesses") {
    auto rep = verify_construction("stripes", {{"n_list", {2, 2}}});
    CHECK(rep.all_hold());

    auto c32 = construct_stripes_multiplicity({3, 2});
    CHECK(count_monochromatic(c32, SubgraphPattern::matching(3), 1) == 15);
    CHECK(count_monochromatic(c32, SubgraphPattern::matching(2), 2) == 0);

    auto c222 = construct_stripes_multiplicity({2, 2, 2});
    long long total = 0;
    for (Color col = 1; col <= 3; ++col)
        total += count_monochromatic(c222, SubgraphPattern::matching(2), col);
    CHECK(total == 3);
}

TEST_CASE("sequential cones") {
    auto rep = verify_construction("sequential-cones", {{"k", 6}});
    CHECK(rep.all_hold());
    CHECK(count_rainbow(rep.coloring, SubgraphPattern::triangle()) == 0);

    auto k2 = verify_construction("sequential-cones", {{"k", 2}});
    CHECK(k2.coloring.n == 5);
    CHECK(k2.all_hold());
}

TEST_CASE("triangle-matching multiplicity witness") {
    auto rep = verify_construction("gm-k3-matching", {{"k", 6}, {"n", 2}});
    CHECK(rep.all_hold());
    auto total = gm_total(rep.coloring, SubgraphPattern::triangle(), SubgraphPattern::matching(2));
    CHECK(total.total == 3);

    auto c33 = construct_gm_k3_matching(3, 3);
    auto t33 = gm_total(c33, SubgraphPattern::triangle(), SubgraphPattern::matching(3));
    CHECK(t33.rainbow == 0);
    CHECK(t33.total == 15);

    auto c22 = construct_gm_k3_matching(2, 2);
    auto t22 = gm_total(c22, SubgraphPattern::triangle(), SubgraphPattern::matching(2));
    CHECK(t22.total == 3);
}

TEST_CASE("path-matching multiplicity witnesses") {
    auto prop = verify_construction("prop-k2n", {{"k", 5}, {"n", 6}});
    CHECK(prop.in_stated_range);
    CHECK(prop.all_hold());

    auto off_diagonal = verify_construction("prop-k2n", {{"k", 5}, {"n", 4}});
    CHECK(!off_diagonal.in_stated_range); // host n+2k-4 = 10, not 2n = 8

    auto thm = verify_construction("thm-k3n1", {{"k", 5}, {"n", 6}});
    CHECK(thm.all_hold());
    for (Color col = 2; col <= 5; ++col)
        CHECK(count_monochromatic(thm.coloring, SubgraphPattern::matching(6), col) == 0);
}

TEST_CASE("rainbow matching coloring") {
    auto c3 = construct_lemcount(3);
    CHECK(count_rainbow(c3, SubgraphPattern::matching(2)) >= 1);
    // the color-1 class is a C_4 with exactly two 2-matchings
    CHECK(count_monochromatic(c3, SubgraphPattern::matching(2), 1) == 2);

    auto c2 = construct_lemcount(2);
    CHECK(c2.n == 2);
    CHECK(c2.color(0, 1) == 2);
    auto rep = verify_construction("lemcount", {{"k", 2}});
    CHECK(!rep.in_stated_range); // color 1 unused on K_2
}

TEST_CASE("construction claim reports serialize") {
    auto rep = verify_construction("sequential-cones", {{"k", 6}});
    auto j = to_json(rep);
    CHECK(j.at("all_claims_hold").get<bool>());
    CHECK(j.at("coloring").at("n").get<int>() == 9);
    CHECK(j.at("claims").size() >= 2);
}
