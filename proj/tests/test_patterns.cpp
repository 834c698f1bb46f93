#include "gcsum/patterns.hpp"
#include "gcsum/chromatic.hpp"
#include "gcsum/generate.hpp"

#include "support.hpp"

using namespace gcsum;

TEST_CASE("merge on a vertex") {
    Graph bowtie = merge_on_vertex(complete_graph(3), 0, complete_graph(3), 0);
    CHECK(bowtie.n() == 5);
    CHECK(bowtie.edge_count() == 6);

    CHECK(merge_on_vertex(path_graph(2), 1, path_graph(2), 0) == path_graph(3));

    Graph two_c5 = merge_on_vertex(cycle_graph(5), 0, cycle_graph(5), 0);
    CHECK(two_c5.n() == 9);
    CHECK(two_c5.edge_count() == 10);
    CHECK(chromatic_number(two_c5) == 3);

    CHECK_FAILS_WITH(merge_on_vertex(path_graph(2), 5, path_graph(2), 0), errc::index_out_of_range);
}

TEST_CASE("merge on an edge") {
    Graph domino = merge_on_edge(cycle_graph(4), {0, 1}, cycle_graph(4), {0, 1});
    CHECK(domino.n() == 6);
    CHECK(domino.edge_count() == 7);

    Graph k4_minus = merge_on_edge(complete_graph(3), {0, 1}, complete_graph(3), {1, 2});
    CHECK(k4_minus.n() == 4);
    CHECK(k4_minus.edge_count() == 5);
    CHECK(chromatic_number(k4_minus) == 3);

    Graph c5c5 = merge_on_edge(cycle_graph(5), {2, 3}, cycle_graph(5), {0, 4}, true);
    CHECK(c5c5.n() == 8);
    CHECK(c5c5.edge_count() == 9);
    CHECK(chromatic_number(c5c5) == 3);

    CHECK_FAILS_WITH(merge_on_edge(cycle_graph(4), {0, 2}, cycle_graph(4), {0, 1}),
                     errc::edge_not_present);
}

TEST_CASE("join by a path") {
    Graph j1 = join_by_path(complete_graph(3), 0, complete_graph(3), 0, 1);
    CHECK(j1.n() == 7);
    CHECK(j1.edge_count() == 8);

    Graph j0 = join_by_path(cycle_graph(5), 0, cycle_graph(5), 0, 0);
    CHECK(j0.n() == 10);
    CHECK(j0.edge_count() == 11);

    Graph j2 = join_by_path(path_graph(3), 1, cycle_graph(4), 2, 2);
    CHECK(j2.edge_count() == path_graph(3).edge_count() + cycle_graph(4).edge_count() + 3);
}

TEST_CASE("build treelike compositions") {
    // friendship graph: three triangles on a common vertex
    CompositionSpec clover;
    clover.base = complete_graph(3);
    clover.elements.push_back(
        {ElementSpec::Kind::cloverlike, 3, {0, 0, 0}, {}, {}, {}});
    auto built = build_treelike(clover);
    CHECK(built.graph.n() == 7);
    CHECK(built.graph.edge_count() == 9);

    // three C4 pages on one common edge
    CompositionSpec book;
    book.base = cycle_graph(4);
    book.elements.push_back({ElementSpec::Kind::booklike, 3,
                             {}, {{0, 1}, {0, 1}, {0, 1}}, {false, false, false}, {}});
    auto pages = build_treelike(book);
    CHECK(pages.graph.n() == 8);
    CHECK(pages.graph.edge_count() == 10);

    // a cycle of joins is rejected
    CompositionSpec cyclic;
    cyclic.base = complete_graph(3);
    cyclic.elements.assign(2, ElementSpec{});
    cyclic.joins.push_back({0, 0, 1, 0, 0});
    cyclic.joins.push_back({1, 1, 0, 1, 1});
    CHECK_FAILS_WITH(build_treelike(cyclic), errc::cyclic_spec_rejected);

    cyclic.allow_cyclic = true;
    CHECK_NOTHROW(build_treelike(cyclic));

    CompositionSpec bad;
    bad.base = complete_graph(3);
    bad.elements.push_back({ElementSpec::Kind::cloverlike, 3, {0, 0}, {}, {}, {}});
    CHECK_FAILS_WITH(build_treelike(bad), errc::malformed_spec);
}

TEST_CASE("provenance maps cover the composition") {
    CompositionSpec spec;
    spec.base = cycle_graph(4);
    spec.elements.push_back(ElementSpec{});
    spec.elements.push_back({ElementSpec::Kind::vertex, 1, {}, {}, {}, {}});
    spec.joins.push_back({0, 2, 1, 0, 2});
    auto built = build_treelike(spec);
    REQUIRE(built.graph.n() == 4 + 1 + 2);
    CHECK(built.element_of[0] == 0);
    CHECK(built.element_of[4] == 1);
    CHECK(built.element_of[5] == -1);  // path interior
    CHECK(built.origins[0].size() == 1);
    CHECK(built.origins[5].empty());
    // every copy slot lands somewhere
    for (std::size_t e = 0; e < built.slot_map.size(); ++e)
        for (int s : built.slot_map[e]) CHECK(s < built.element_graphs[e].n());
}

TEST_CASE("treelike chromatic invariance on explicit shapes") {
    // two C5 copies sharing an edge
    CompositionSpec grid;
    grid.base = cycle_graph(5);
    grid.elements.push_back({ElementSpec::Kind::gridlike, 2, {}, {}, {},
                             {GridMerge{0, {0, 1}, 1, {2, 3}, false}}});
    auto r = verify_treelike_chromatic(grid);
    CHECK(r.chi_h == 3);
    CHECK(r.chi_star == 3);
    CHECK(r.match);
    CHECK(r.constructive);
    REQUIRE(r.witness.has_value());
    CHECK(is_proper(build_treelike(grid).graph, *r.witness));

    // three K3 petals
    CompositionSpec clover;
    clover.base = complete_graph(3);
    clover.elements.push_back({ElementSpec::Kind::cloverlike, 3, {0, 1, 2}, {}, {}, {}});
    auto rc = verify_treelike_chromatic(clover);
    CHECK(rc.chi_h == 3);
    CHECK(rc.chi_star == 3);
    CHECK(rc.match);

    // two C4 copies joined by a two-interior path stay bipartite
    CompositionSpec joined;
    joined.base = cycle_graph(4);
    joined.elements.assign(2, ElementSpec{});
    joined.joins.push_back({0, 1, 1, 3, 2});
    auto rj = verify_treelike_chromatic(joined);
    CHECK(rj.chi_h == 2);
    CHECK(rj.chi_star == 2);
    CHECK(rj.match);
    REQUIRE(rj.witness.has_value());
    CHECK(is_proper(build_treelike(joined).graph, *rj.witness));

    CompositionSpec k1_base;
    k1_base.base = empty_graph(1);
    k1_base.elements.push_back(ElementSpec{});
    CHECK_FAILS_WITH(verify_treelike_chromatic(k1_base), errc::precondition_violated);
}

TEST_CASE("random treelike specs keep the base chromatic number") {
    const std::vector<Graph> bases = {complete_graph(3), cycle_graph(4), cycle_graph(5),
                                      complete_graph(4), path_graph(4)};
    Rng rng(0xabcdu);
    for (int i = 0; i < 60; ++i) {
        const Graph& h = bases[static_cast<std::size_t>(i) % bases.size()];
        auto spec = random_treelike_spec(rng, h, 5, 24);
        auto built = build_treelike(spec);
        REQUIRE(built.graph.n() <= 24);
        auto r = verify_treelike_chromatic(spec);
        CAPTURE(i, built.graph.n());
        CHECK(r.match);
        REQUIRE(r.witness.has_value());
        CHECK(is_proper(built.graph, *r.witness));
        CHECK(r.witness->k == r.chi_h);
        CHECK(all_colors_used(*r.witness));
    }
}

TEST_CASE("swap propagation preserves class sizes") {
    Rng rng(77);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(rng, 3 + rand_below(rng, 6));
        auto sums = chi_sums(g);
        auto c = sums.witness_min;
        int a = 1 + rand_below(rng, c.k), b = 1 + rand_below(rng, c.k);
        auto swapped = recolor_swap(c, a, b);
        CHECK(is_proper(g, swapped));
        auto ta = theta(c), tb = theta(swapped);
        std::sort(ta.begin(), ta.end());
        std::sort(tb.begin(), tb.end());
        CHECK(ta == tb);
        CHECK(recolor_swap(swapped, a, b) == c);
    }
}
