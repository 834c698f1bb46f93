#include "gcsum/matching.hpp"
#include "gcsum/generate.hpp"
#include "gcsum/oracle.hpp"

#include "support.hpp"

using namespace gcsum;

namespace {

BipartitePartition halves(int nx, int ny) {
    BipartitePartition p;
    for (int v = 0; v < nx; ++v) p.X.push_back(v);
    for (int v = 0; v < ny; ++v) p.Y.push_back(nx + v);
    return p;
}

BipartitePartition alternating(int n) {
    BipartitePartition p;
    for (int v = 0; v < n; v += 2) p.X.push_back(v);
    for (int v = 1; v < n; v += 2) p.Y.push_back(v);
    return p;
}

}  // namespace

TEST_CASE("perfect matching enumeration on the paper catalog") {
    auto pm4 = enumerate_perfect_matchings(complement(path_graph(4)));
    REQUIRE(pm4.size() == 1);
    CHECK(pm4[0].pairs == std::vector<VertexPair>{{0, 2}, {1, 3}});

    auto pm6 = enumerate_perfect_matchings(complement(path_graph(6)));
    REQUIRE(pm6.size() == 5);
    // the published list of five extensions, as unordered pair sets
    std::vector<Matching> expected = {
        normalized_matching({{0, 5}, {1, 3}, {2, 4}}),
        normalized_matching({{0, 2}, {1, 4}, {3, 5}}),
        normalized_matching({{0, 3}, {1, 4}, {2, 5}}),
        normalized_matching({{0, 4}, {1, 3}, {2, 5}}),
        normalized_matching({{0, 3}, {1, 5}, {2, 4}}),
    };
    for (const auto& m : expected) CHECK(std::count(pm6.begin(), pm6.end(), m) == 1);

    CHECK(enumerate_perfect_matchings(complete_graph(4)).size() == 3);
    CHECK(enumerate_perfect_matchings(path_graph(5)).empty());  // odd order
}

TEST_CASE("enumeration is sorted, disjoint, and edge-only") {
    Rng rng(3);
    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(rng, 4 + 2 * rand_below(rng, 4));
        auto pms = enumerate_perfect_matchings(g);
        CHECK(std::is_sorted(pms.begin(), pms.end(), [](const Matching& a, const Matching& b) {
            return a.pairs < b.pairs;
        }));
        for (const auto& m : pms) {
            CHECK(m.is_perfect(g.n()));
            for (auto [u, v] : m.pairs) CHECK(g.has_edge(u, v));
        }
    }
}

TEST_CASE("complete graph matching counts are double factorials") {
    long expect = 1;
    for (int k = 1; k <= 4; ++k) {
        expect *= 2 * k - 1;
        CHECK(static_cast<long>(enumerate_perfect_matchings(complete_graph(2 * k)).size()) == expect);
    }
}

TEST_CASE("early stop visits only the first matching") {
    int seen = 0;
    enumerate_perfect_matchings(complete_graph(6), [&](const Matching&) {
        ++seen;
        return false;
    });
    CHECK(seen == 1);
    auto first = first_perfect_matching(complete_graph(6));
    REQUIRE(first.has_value());
    CHECK(first->pairs == std::vector<VertexPair>{{0, 1}, {2, 3}, {4, 5}});
}

TEST_CASE("hopcroft-karp basics") {
    CHECK(hopcroft_karp(complete_bipartite_graph(3, 3), halves(3, 3)).size() == 3);
    CHECK(hopcroft_karp(cycle_graph(6), alternating(6)).size() == 3);
    CHECK(hopcroft_karp(path_graph(5), alternating(5)).size() == 2);
    CHECK_FAILS_WITH(hopcroft_karp(complete_graph(3), halves(2, 1)), errc::invalid_partition);
}

TEST_CASE("hopcroft-karp matches the brute-force maximum") {
    Rng rng(5);
    for (int i = 0; i < 120; ++i) {
        int nx = 1 + rand_below(rng, 6), ny = 1 + rand_below(rng, 6);
        auto [g, p] = random_bipartite(rng, nx, ny);
        auto m = hopcroft_karp(g, p);
        CHECK(m.size() == oracle::brute_max_matching(g, p));
        Mask cov = 0;
        for (auto [u, v] : m.pairs) {
            CHECK(g.has_edge(u, v));
            CHECK((cov & (bit(u) | bit(v))) == 0);
            cov |= bit(u) | bit(v);
        }
    }
}

TEST_CASE("maximum bi-distinct non-adjacent pairs") {
    CHECK(max_bidistinct_pairs(complete_bipartite_graph(3, 3), halves(3, 3)).ell == 0);

    auto c6 = max_bidistinct_pairs(cycle_graph(6), alternating(6));
    CHECK(c6.ell == 3);
    CHECK(c6.pairs == std::vector<VertexPair>{{0, 3}, {2, 5}, {4, 1}});

    // K_{3,3} minus a perfect matching: the removed matching is the pairing
    Graph k33mpm(6, {{0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4}});
    auto r = max_bidistinct_pairs(k33mpm, halves(3, 3));
    CHECK(r.ell == 3);
    CHECK(r.pairs == std::vector<VertexPair>{{0, 3}, {1, 4}, {2, 5}});
}

TEST_CASE("hall condition on complement neighborhoods") {
    CHECK(hall_condition_nc(cycle_graph(6), alternating(6)));
    CHECK_FALSE(hall_condition_nc(complete_bipartite_graph(3, 3), halves(3, 3)));

    Graph k44mpm = [] {
        std::vector<VertexPair> e;
        for (int u = 0; u < 4; ++u)
            for (int v = 0; v < 4; ++v)
                if (u != v) e.emplace_back(u, 4 + v);
        return Graph(8, e);
    }();
    CHECK(hall_condition_nc(k44mpm, halves(4, 4)));
    CHECK_FAILS_WITH(hall_condition_nc(path_graph(5), alternating(5)), errc::unbalanced_partition);
}

TEST_CASE("hall condition agrees with the subset oracle") {
    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        int n = 1 + rand_below(rng, 5);
        auto [g, p] = random_bipartite(rng, n, n);
        bool fast = hall_condition_nc(g, p);
        CHECK(fast == oracle::hall_condition_subsets(g, p));
        CHECK(fast == (max_bidistinct_pairs(g, p).ell == n));
    }
}
