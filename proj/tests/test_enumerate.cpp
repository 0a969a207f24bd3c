#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include <gallai/canonical.hpp>
#include <gallai/enumerate.hpp>

using namespace gallai;

namespace {

// all distinct labeled images of c under S_n x S_k (vertex relabel + color
// permutation within palette 1..k_avail), brute force
long long orbit_size_brute_force(const EdgeColoring& c, int k_avail) {
    std::vector<int> vperm(c.n);
    std::iota(vperm.begin(), vperm.end(), 0);
    std::set<std::vector<std::uint8_t>> images;
    do {
        std::vector<int> cperm(k_avail + 1);
        std::iota(cperm.begin(), cperm.end(), 0);
        do {
            EdgeColoring img(c.n, k_avail);
            for (int v = 1; v < c.n; ++v)
                for (int u = 0; u < v; ++u)
                    img.set_color(vperm[u], vperm[v], cperm[c.color(u, v)]);
            images.insert(img.chi);
        } while (std::next_permutation(cperm.begin() + 1, cperm.end()));
    } while (std::next_permutation(vperm.begin(), vperm.end()));
    return static_cast<long long>(images.size());
}

} // namespace

TEST_CASE("labeled enumeration counts") {
    EnumerationSpec spec;
    spec.symmetry = Symmetry::labeled;

    spec.n = 3;
    spec.max_colors = 1;
    spec.exactness = Exactness::exact;
    CHECK(count_colorings(spec) == 1);

    spec.max_colors = 2; // 2^3 - 2 surjective
    CHECK(count_colorings(spec) == 6);

    spec.exactness = Exactness::at_most;
    CHECK(count_colorings(spec) == 8);

    spec.n = 4;
    spec.max_colors = 3;
    CHECK(count_colorings(spec) == 729);
}

TEST_CASE("color-canonical enumeration") {
    EnumerationSpec spec;
    spec.symmetry = Symmetry::color_canonical;
    spec.n = 3;
    spec.max_colors = 3;
    spec.exactness = Exactness::exact;
    auto reps = collect_colorings(spec);
    REQUIRE(reps.size() == 1); // the rainbow triangle, up to color names
    CHECK(find_rainbow_triangle(reps[0]).has_value());

    // restricted-growth soundness: re-canonicalizing is the identity
    spec.n = 4;
    spec.max_colors = 3;
    spec.exactness = Exactness::at_most;
    enumerate_colorings(spec, [&](const EdgeColoring& c) {
        CHECK(is_rgs(c));
        CHECK(rgs_relabel(c) == c);
        return true;
    });

    // at-most-k color-canonical reps of K_3 are the set partitions of 3 edges
    spec.n = 3;
    spec.max_colors = 3;
    CHECK(count_colorings(spec) == 5);
}

TEST_CASE("exact mode with more colors than edges is empty") {
    EnumerationSpec spec;
    spec.n = 3;
    spec.max_colors = 4;
    spec.exactness = Exactness::exact;
    spec.symmetry = Symmetry::labeled;
    CHECK(count_colorings(spec) == 0);
}

TEST_CASE("full-canonical representatives cover all labeled colorings") {
    for (int n = 3; n <= 5; ++n)
        for (int k = 1; k <= 3; ++k) {
            EnumerationSpec spec;
            spec.n = n;
            spec.max_colors = k;
            spec.exactness = Exactness::at_most;
            spec.symmetry = Symmetry::full_canonical;
            long long total = 0;
            long long reps = 0;
            enumerate_colorings(spec, [&](const EdgeColoring& c) {
                ++reps;
                total += orbit_size_brute_force(c, k);
                return true;
            });
            long long labeled = 1;
            for (int e = 0; e < pair_count(n); ++e) labeled *= k;
            INFO("n=" << n << " k=" << k << " reps=" << reps);
            CHECK(total == labeled);
        }
}

TEST_CASE("full-canonical representatives are canonical and unique") {
    EnumerationSpec spec;
    spec.n = 5;
    spec.max_colors = 3;
    spec.exactness = Exactness::exact;
    spec.symmetry = Symmetry::full_canonical;
    std::set<std::vector<std::uint8_t>> keys;
    enumerate_colorings(spec, [&](const EdgeColoring& c) {
        CHECK(is_rgs(c));
        CHECK(is_canonical(c));
        CHECK(c.is_exact());
        auto key = canonical_key(c);
        CHECK(key == c.chi);
        CHECK(keys.insert(key).second); // no orbit appears twice
        return true;
    });
    CHECK(!keys.empty());
}

TEST_CASE("local coloring enumeration") {
    long long n3k1 = 0;
    enumerate_local_colorings(3, 1, [&](const EdgeColoring&) { ++n3k1; return true; });
    CHECK(n3k1 == 1);

    // all 5 set partitions of E(K_3) have every color degree <= 2
    long long n3k2 = 0;
    enumerate_local_colorings(3, 2, [&](const EdgeColoring& c) {
        ++n3k2;
        CHECK(c.max_color_degree() <= 2);
        return true;
    });
    CHECK(n3k2 == 5);

    long long n4k1 = 0;
    enumerate_local_colorings(4, 1, [&](const EdgeColoring&) { ++n4k1; return true; });
    CHECK(n4k1 == 1);
}

TEST_CASE("local filter correctness on samples") {
    // every yielded coloring obeys the bound; every color-canonical coloring
    // violating the bound is absent
    std::set<std::vector<std::uint8_t>> locals;
    enumerate_local_colorings(4, 2, [&](const EdgeColoring& c) {
        locals.insert(c.chi);
        return true;
    });
    EnumerationSpec all;
    all.n = 4;
    all.max_colors = pair_count(4);
    all.exactness = Exactness::at_most;
    all.symmetry = Symmetry::color_canonical;
    long long violations = 0, members = 0;
    enumerate_colorings(all, [&](const EdgeColoring& c) {
        bool ok = c.max_color_degree() <= 2;
        bool present = locals.count(c.chi) > 0;
        CHECK(ok == present);
        if (!ok) ++violations;
        else ++members;
        return true;
    });
    CHECK(members == static_cast<long long>(locals.size()));
    CHECK(violations > 0);
}

TEST_CASE("prefix predicate prunes hereditarily") {
    // forbid any second color: only the monochromatic coloring survives
    EnumerationSpec spec;
    spec.n = 4;
    spec.max_colors = 3;
    spec.exactness = Exactness::at_most;
    spec.symmetry = Symmetry::color_canonical;
    long long count = 0;
    enumerate_colorings(
        spec, [&](const EdgeColoring&) { ++count; return true; },
        [](const EdgeColoring& partial, int u, int v) { return partial.color(u, v) == 1; });
    CHECK(count == 1);
}

TEST_CASE("early stop from the visitor") {
    EnumerationSpec spec;
    spec.n = 4;
    spec.max_colors = 2;
    spec.exactness = Exactness::at_most;
    spec.symmetry = Symmetry::labeled;
    long long seen = 0;
    bool completed = enumerate_colorings(spec, [&](const EdgeColoring&) {
        ++seen;
        return seen < 5;
    });
    CHECK(!completed);
    CHECK(seen == 5);
}
