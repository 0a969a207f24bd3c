// A short tour: build an extremal coloring, inspect its structure, and
// compare a search value against a closed form.

#include <iostream>

#include <gallai/constructions.hpp>
#include <gallai/formulas.hpp>
#include <gallai/search.hpp>
#include <gallai/structure.hpp>

using namespace gallai;

int main() {
    auto c = construct_dominant_matching(4, 4); // K_7, colors 1..4
    std::cout << "construction on K_" << c.n << " with " << c.k << " colors\n";

    auto sc = classify_rainbow_k13_free(c);
    std::cout << "rainbow-K13-free case: " << sc.id << "\n";

    auto gp = gallai_partition(c);
    std::cout << "Gallai partition into " << gp.part_count() << " parts, "
              << gp.reduced_colors.size() << " reduced color(s)\n";

    auto broom = find_mono_spanning_broom(c);
    if (broom.witness)
        std::cout << "monochromatic spanning broom in color " << broom.witness->color
                  << " with path length " << broom.witness->path.size() - 1 << " and "
                  << broom.witness->leaves.size() << " leaves\n";

    SearchTask t;
    t.rainbow_target = SubgraphPattern::path(5);
    t.mono_target = SubgraphPattern::matching(2);
    t.k = 5;
    t.n_max = 6;
    auto r = compute_gallai_ramsey(t);
    std::cout << "gr_5(P5 : 2K2) = " << r.value.value_or(-1) << " (closed form "
              << gr_p5_matching(5, 2).get_str() << ")\n";
    return 0;
}
