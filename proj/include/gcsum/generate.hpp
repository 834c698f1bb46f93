#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gcsum/graph.hpp"
#include "gcsum/patterns.hpp"

namespace gcsum {

// Deterministic instance generators (fixed-seed mt19937) used by the
// verification sweeps and the test suites. Avoids std::uniform_int_distribution
// so identical seeds give identical instances everywhere.

using Rng = std::mt19937;

inline int rand_below(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); }

inline bool rand_bool(Rng& rng) { return (rng() & 1u) != 0; }

// Erdos-Renyi-style: each pair becomes an edge with probability num/den.
inline Graph random_graph(Rng& rng, int n, int num = 1, int den = 2) {
    std::vector<VertexPair> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rand_below(rng, den) < num) e.emplace_back(u, v);
    return Graph(n, e);
}

inline std::vector<int> random_permutation(Rng& rng, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(rand_below(rng, i + 1))]);
    return p;
}

// Connected graph with every degree <= max_deg: random Hamiltonian path,
// then extra random edges while the cap allows.
inline Graph random_connected_max_degree(Rng& rng, int n, int max_deg, int extra_edges) {
    auto order = random_permutation(rng, n);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<VertexPair> e;
    std::vector<std::vector<bool>> used(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    auto put = [&](int u, int v) {
        e.emplace_back(std::min(u, v), std::max(u, v));
        used[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    };
    for (int i = 0; i + 1 < n; ++i) put(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i + 1)]);
    for (int tries = 0; tries < 20 * extra_edges; ++tries) {
        if (extra_edges <= 0) break;
        int u = rand_below(rng, n), v = rand_below(rng, n);
        if (u == v || used[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) continue;
        if (deg[static_cast<std::size_t>(u)] >= max_deg || deg[static_cast<std::size_t>(v)] >= max_deg) continue;
        put(u, v);
        --extra_edges;
    }
    return Graph(n, e);
}

// Bipartite graph on X = 0..nx-1, Y = nx..nx+ny-1 with each cross pair an
// edge with probability 1/2.
inline std::pair<Graph, BipartitePartition> random_bipartite(Rng& rng, int nx, int ny) {
    std::vector<VertexPair> e;
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y)
            if (rand_bool(rng)) e.emplace_back(x, nx + y);
    BipartitePartition p;
    for (int x = 0; x < nx; ++x) p.X.push_back(x);
    for (int y = 0; y < ny; ++y) p.Y.push_back(nx + y);
    return {Graph(nx + ny, e), p};
}

// Random treelike composition over the given base graph: a few elements of
// random kinds, joined in a random tree by short paths. Sizes are capped so
// the composition stays within max_total vertices.
inline CompositionSpec random_treelike_spec(Rng& rng, const Graph& base, int max_elements, int max_total) {
    const int hn = base.n();
    CompositionSpec spec;
    spec.base = base;

    auto element_size = [&](const ElementSpec& e) {
        switch (e.kind) {
            case ElementSpec::Kind::vertex: return 1;
            case ElementSpec::Kind::single: return hn;
            case ElementSpec::Kind::cloverlike: return e.copies * hn - (e.copies - 1);
            case ElementSpec::Kind::booklike: return e.copies * hn - 2 * (e.copies - 1);
            case ElementSpec::Kind::gridlike: return e.copies * hn - 2 * (e.copies - 1);
        }
        return hn;
    };

    int total = 0;
    int want = 1 + rand_below(rng, max_elements);
    for (int i = 0; i < want; ++i) {
        ElementSpec e;
        int kind = rand_below(rng, 5);
        int copies = 2 + rand_below(rng, 2);
        switch (kind) {
            case 0: e.kind = ElementSpec::Kind::vertex; e.copies = 1; break;
            case 1: e.kind = ElementSpec::Kind::single; e.copies = 1; break;
            case 2: {
                e.kind = ElementSpec::Kind::cloverlike;
                e.copies = copies;
                for (int c = 0; c < copies; ++c) e.merge_vertices.push_back(rand_below(rng, hn));
                break;
            }
            case 3: {
                e.kind = ElementSpec::Kind::booklike;
                e.copies = copies;
                for (int c = 0; c < copies; ++c) {
                    auto edge = base.edges()[static_cast<std::size_t>(rand_below(rng, base.edge_count()))];
                    e.merge_edges.push_back(edge);
                    e.flips.push_back(rand_bool(rng));
                }
                break;
            }
            default: {
                e.kind = ElementSpec::Kind::gridlike;
                e.copies = copies;
                for (int c = 1; c < copies; ++c) {
                    GridMerge gm;
                    gm.copy_a = c - 1;
                    gm.copy_b = c;
                    gm.edge_a = base.edges()[static_cast<std::size_t>(rand_below(rng, base.edge_count()))];
                    gm.edge_b = base.edges()[static_cast<std::size_t>(rand_below(rng, base.edge_count()))];
                    gm.flip = rand_bool(rng);
                    e.merges.push_back(gm);
                }
                break;
            }
        }
        int size = element_size(e);
        if (!spec.elements.empty() && total + size + 2 > max_total) break;
        // never compose vertex elements only
        if (i == want - 1 && spec.elements.empty() && e.kind == ElementSpec::Kind::vertex)
            e = ElementSpec{};  // plain copy of H
        spec.elements.push_back(e);
        total += size;
    }
    if (spec.elements.size() == 1 && spec.elements[0].kind == ElementSpec::Kind::vertex)
        spec.elements[0] = ElementSpec{};

    // Random tree over the elements; interior counts bounded by the budget.
    std::vector<int> sizes;
    for (const auto& e : spec.elements) sizes.push_back(element_size(e));
    for (int i = 1; i < static_cast<int>(spec.elements.size()); ++i) {
        JoinSpec j;
        j.from_element = rand_below(rng, i);
        j.to_element = i;
        j.from_vertex = rand_below(rng, sizes[static_cast<std::size_t>(j.from_element)]);
        j.to_vertex = rand_below(rng, sizes[static_cast<std::size_t>(i)]);
        j.interior = std::min(2, std::max(0, max_total - total));
        j.interior = j.interior > 0 ? rand_below(rng, j.interior + 1) : 0;
        total += j.interior;
        spec.joins.push_back(j);
    }
    return spec;
}

// Labeled graphs on n vertices with every degree <= cap, visited once each.
template <typename Fn>
inline void enumerate_graphs_max_degree(int n, int cap, Fn&& fn) {
    std::vector<VertexPair> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<VertexPair> chosen;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    struct Rec {
        const std::vector<VertexPair>& slots;
        std::vector<VertexPair>& chosen;
        std::vector<int>& deg;
        int n, cap;
        Fn& fn;
        void run(std::size_t i) {
            if (i == slots.size()) {
                fn(Graph(n, chosen));
                return;
            }
            run(i + 1);  // skip this slot
            auto [u, v] = slots[i];
            if (deg[static_cast<std::size_t>(u)] < cap && deg[static_cast<std::size_t>(v)] < cap) {
                ++deg[static_cast<std::size_t>(u)];
                ++deg[static_cast<std::size_t>(v)];
                chosen.push_back(slots[i]);
                run(i + 1);
                chosen.pop_back();
                --deg[static_cast<std::size_t>(u)];
                --deg[static_cast<std::size_t>(v)];
            }
        }
    } rec{slots, chosen, deg, n, cap, fn};
    rec.run(0);
}

}  // namespace gcsum
