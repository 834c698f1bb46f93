#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gcsum/graph.hpp"
#include "gcsum/isomorphism.hpp"
#include "gcsum/matching.hpp"

namespace gcsum {

// All complete degree-extensions of a base graph: one per perfect matching of
// the complement, grouped into isomorphism classes.
struct ExtensionSet {
    Graph base;
    std::vector<Matching> matchings;            // lexicographic order
    std::vector<Graph> graphs;                  // graphs[i] = base + matchings[i]
    std::vector<std::vector<int>> iso_classes;  // ordered by smallest member
};

inline Graph add_matching_edges(const Graph& g, const Matching& m) {
    auto edges = g.edges();
    edges.insert(edges.end(), m.pairs.begin(), m.pairs.end());
    return Graph(g.n(), edges);
}

// G + M where M is a perfect matching of complement(G). Raises every degree
// by exactly one.
inline Graph extend_with_matching(const Graph& g, const Matching& m) {
    require(g.n() % 2 == 0, errc::odd_order, "complete degree-extension needs even order");
    Mask covered = 0;
    for (auto [u, v] : m.pairs) {
        require(u >= 0 && u < g.n() && v >= 0 && v < g.n() && u != v, errc::out_of_range,
                "matching pair out of range");
        require(!g.has_edge(u, v), errc::matching_not_in_complement,
                "pair (" + std::to_string(u) + "," + std::to_string(v) + ") is an edge of the base graph");
        require(!(covered & (bit(u) | bit(v))), errc::matching_not_perfect, "pairs are not vertex-disjoint");
        covered |= bit(u) | bit(v);
    }
    require(covered == g.vertex_mask(), errc::matching_not_perfect, "matching does not cover every vertex");
    return add_matching_edges(g, m);
}

// Every complete degree-extension of g. An empty extension list means no
// perfect matching of the complement exists; that is a result, not an error.
inline ExtensionSet complete_extensions(const Graph& g) {
    require(g.n() % 2 == 0, errc::odd_order, "complete degree-extension needs even order");
    ExtensionSet out;
    out.base = g;
    out.matchings = enumerate_perfect_matchings(complement(g));
    out.graphs.reserve(out.matchings.size());
    for (const auto& m : out.matchings) out.graphs.push_back(add_matching_edges(g, m));
    out.iso_classes = group_by_isomorphism(out.graphs, std::max(12, g.n()));
    return out;
}

enum class DegreePick { maximum, minimum };

struct IncompleteExtension {
    Graph graph;
    int pivot;  // the vertex left unmatched
    Matching matching;
};

// Odd order: remove one extremal-degree vertex (lowest index breaks ties),
// match the rest along complement edges, and add that matching back to g.
inline std::optional<IncompleteExtension> incomplete_extension(const Graph& g,
                                                               DegreePick pick = DegreePick::maximum) {
    require(g.n() % 2 == 1, errc::even_order, "incomplete degree-extension needs odd order");
    require(g.n() >= 3, errc::invalid_params, "incomplete degree-extension needs n >= 3");
    int target = pick == DegreePick::maximum ? max_degree(g) : min_degree(g);
    int pivot = -1;
    for (int v = 0; v < g.n() && pivot < 0; ++v)
        if (g.degree(v) == target) pivot = v;

    // Perfect matching of complement(g - pivot) in original labels: complement
    // and vertex deletion commute on the surviving vertices.
    const Graph comp = complement(g);
    const Mask goal = full_mask(g.n()) & ~bit(pivot);
    std::optional<Matching> found;
    std::vector<VertexPair> acc;
    struct Rec {
        const Graph& comp;
        Mask goal;
        std::optional<Matching>& found;
        std::vector<VertexPair>& acc;
        bool run(Mask covered) {
            if (covered == goal) {
                found = Matching{acc};
                return false;
            }
            int u = std::countr_zero(goal & ~covered);
            Mask cand = comp.adjacency(u) & goal & ~covered;
            while (cand) {
                int v = std::countr_zero(cand);
                cand &= cand - 1;
                acc.emplace_back(u, v);
                bool keep = run(covered | bit(u) | bit(v));
                acc.pop_back();
                if (!keep) return false;
            }
            return true;
        }
    } rec{comp, goal, found, acc};
    rec.run(0);

    if (!found) return std::nullopt;
    return IncompleteExtension{add_matching_edges(g, *found), pivot, *found};
}

// Alternate edges of a path with an even number of vertices form its unique
// perfect matching.
inline Matching matching_from_path(const std::vector<int>& path) {
    std::vector<VertexPair> pairs;
    for (std::size_t i = 0; i + 1 < path.size(); i += 2) pairs.emplace_back(path[i], path[i + 1]);
    return normalized_matching(std::move(pairs));
}

// Spanning-path route: a Hamiltonian path of the complement yields one
// perfect matching, hence one complete extension.
inline std::optional<Graph> extension_via_spanning_path(const Graph& g) {
    require(g.n() % 2 == 0, errc::odd_order, "complete degree-extension needs even order");
    require(g.n() <= size_limit(), errc::size_limit_exceeded, "spanning-path search limited to size limit");
    auto path = hamiltonian_path(complement(g));
    if (!path) return std::nullopt;
    return add_matching_edges(g, matching_from_path(*path));
}

// Partition route: per even-sized part, take the spanning-path matching of
// the complement of the induced subgraph; the union is a perfect matching of
// complement(g).
inline std::optional<Graph> extension_via_partition(const Graph& g, const std::vector<std::vector<int>>& parts) {
    Mask seen = 0;
    for (const auto& part : parts) {
        require(part.size() % 2 == 0 && !part.empty(), errc::odd_part, "every part must have even size");
        for (int v : part) {
            require(v >= 0 && v < g.n() && !(seen & bit(v)), errc::not_a_partition,
                    "parts must partition the vertex set");
            seen |= bit(v);
        }
    }
    require(seen == g.vertex_mask(), errc::not_a_partition, "parts must cover every vertex");

    std::vector<VertexPair> pairs;
    for (const auto& part : parts) {
        auto sub = induced_subgraph(g, part);
        auto path = hamiltonian_path(complement(sub));
        if (!path) return std::nullopt;
        for (auto [a, b] : matching_from_path(*path).pairs)
            pairs.emplace_back(part[static_cast<std::size_t>(a)], part[static_cast<std::size_t>(b)]);
    }
    return add_matching_edges(g, normalized_matching(std::move(pairs)));
}

// ---- balanced bipartite constructions --------------------------------------

struct BipartiteConstruction {
    Graph graph;
    int pairs_used;    // cross non-adjacent pairs turned into edges
    Matching added;    // the full added perfect matching
};

// Balanced bipartite extension: turn a parity-adjusted number of bi-distinct
// non-adjacent cross pairs into edges, then pair leftover X vertices among
// themselves and leftover Y vertices among themselves (both sides are
// independent, so any leftover pairing uses complement edges).
inline BipartiteConstruction bipartite_extension_construct(const Graph& b, const BipartitePartition& p) {
    validate_partition(b, p);
    require((b.n() % 2) == 0, errc::odd_order, "complete degree-extension needs even order");
    BipartitePartition q = p;
    if (q.X.size() < q.Y.size()) std::swap(q.X, q.Y);
    const int nx = static_cast<int>(q.X.size()), ny = static_cast<int>(q.Y.size());
    require((nx % 2) == (ny % 2), errc::invalid_partition, "partition sides must have equal parity");

    auto pairing = max_bidistinct_pairs(b, q);
    // Leftover counts n-t and m-t must be even, so t matches the sides'
    // parity; drop one pair when it does not.
    int used = pairing.ell;
    if (used % 2 != nx % 2) --used;
    require(used >= 0, errc::leftover_unpairable,
            "construction infeasible: no parity-compatible number of cross pairs");

    std::vector<VertexPair> added(pairing.pairs.begin(), pairing.pairs.begin() + used);
    Mask cross_used = 0;
    for (auto [x, y] : added) cross_used |= bit(x) | bit(y);
    auto pair_leftovers = [&](const std::vector<int>& side) {
        std::vector<int> rest;
        for (int v : side)
            if (!(cross_used & bit(v))) rest.push_back(v);
        for (std::size_t i = 0; i + 1 < rest.size(); i += 2) added.emplace_back(rest[i], rest[i + 1]);
    };
    pair_leftovers(q.X);
    pair_leftovers(q.Y);

    Matching m = normalized_matching(std::move(added));
    return BipartiteConstruction{extend_with_matching(b, m), used, m};
}

// Internal: the perfect matching of the X-Y non-adjacency graph demanded by
// the Hall condition on N^c.
inline Matching nc_perfect_matching(const Graph& b, const BipartitePartition& p) {
    require(hall_condition_nc(b, p), errc::hall_condition_fails,
            "Hall condition on complement neighborhoods fails");
    auto pairing = max_bidistinct_pairs(b, p);
    return normalized_matching(pairing.pairs);
}

// Adds a perfect matching of cross non-edges; the result is bipartite with
// the same partition.
inline Graph bipartite_preserving_extension(const Graph& b, const BipartitePartition& p) {
    return extend_with_matching(b, nc_perfect_matching(b, p));
}

namespace detail {

// (x, y) orientation of a matching pair relative to side X.
inline std::vector<VertexPair> oriented_cross_pairs(const Matching& m, Mask x_mask) {
    std::vector<VertexPair> out;
    for (auto [u, v] : m.pairs) {
        if (x_mask & bit(u))
            out.emplace_back(u, v);
        else
            out.emplace_back(v, u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Graph swap_two_pairs(const Graph& b, const std::vector<VertexPair>& oriented, std::size_t i,
                            std::size_t j) {
    auto [x1, y1] = oriented[i];
    auto [x2, y2] = oriented[j];
    std::vector<VertexPair> pairs;
    for (std::size_t k = 0; k < oriented.size(); ++k)
        if (k != i && k != j) pairs.push_back(oriented[k]);
    pairs.emplace_back(x1, x2);
    pairs.emplace_back(y1, y2);
    return extend_with_matching(b, normalized_matching(std::move(pairs)));
}

}  // namespace detail

// Same matching M as the preserving extension, but two of its edges x1y1,
// x2y2 (the two smallest by endpoint index) are traded for x1x2 and y1y2,
// which forces an odd cycle.
inline Graph bipartite_swap_extension(const Graph& b, const BipartitePartition& p) {
    require(p.X.size() >= 2, errc::too_small, "swap extension needs |X| >= 2");
    Matching m = nc_perfect_matching(b, p);
    Mask x_mask = 0;
    for (int v : p.X) x_mask |= bit(v);
    auto oriented = detail::oriented_cross_pairs(m, x_mask);
    return detail::swap_two_pairs(b, oriented, 0, 1);
}

// Every choice of the two traded edges, in lexicographic order of the chosen
// index pair.
inline std::vector<Graph> bipartite_swap_extension_choices(const Graph& b, const BipartitePartition& p) {
    require(p.X.size() >= 2, errc::too_small, "swap extension needs |X| >= 2");
    Matching m = nc_perfect_matching(b, p);
    Mask x_mask = 0;
    for (int v : p.X) x_mask |= bit(v);
    auto oriented = detail::oriented_cross_pairs(m, x_mask);
    std::vector<Graph> out;
    for (std::size_t i = 0; i < oriented.size(); ++i)
        for (std::size_t j = i + 1; j < oriented.size(); ++j)
            out.push_back(detail::swap_two_pairs(b, oriented, i, j));
    return out;
}

// Partial extension of an almost regular graph (max degree - min degree = 1):
// match the deficient vertices along complement edges so every degree becomes
// the max degree.
inline std::optional<Graph> partial_extension(const Graph& g) {
    const int hi = max_degree(g), lo = min_degree(g);
    require(hi - lo == 1, errc::not_almost_regular,
            "partial extension requires max degree - min degree = 1");
    std::vector<int> deficient;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) < hi) deficient.push_back(v);
    if (deficient.size() % 2 != 0) return std::nullopt;

    const Graph comp = complement(g);
    Mask goal = 0;
    for (int v : deficient) goal |= bit(v);
    std::optional<Matching> found;
    std::vector<VertexPair> acc;
    struct Rec {
        const Graph& comp;
        Mask goal;
        std::optional<Matching>& found;
        std::vector<VertexPair>& acc;
        bool run(Mask covered) {
            if (covered == goal) {
                found = Matching{acc};
                return false;
            }
            int u = std::countr_zero(goal & ~covered);
            Mask cand = comp.adjacency(u) & goal & ~covered;
            while (cand) {
                int v = std::countr_zero(cand);
                cand &= cand - 1;
                acc.emplace_back(u, v);
                bool keep = run(covered | bit(u) | bit(v));
                acc.pop_back();
                if (!keep) return false;
            }
            return true;
        }
    } rec{comp, goal, found, acc};
    rec.run(0);
    if (!found) return std::nullopt;
    return add_matching_edges(g, *found);
}

}  // namespace gcsum
