#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <string>
#include <vector>

#include "gcsum/graph.hpp"

namespace gcsum {

// Cheap isomorphism-invariant signature used to prefilter pairs before the
// backtracking search: (n, m, sorted degrees, sorted per-vertex triangle
// counts, sorted multiset of all-pairs BFS distances, -1 for unreachable).
inline std::vector<int> iso_signature(const Graph& g) {
    std::vector<int> sig{g.n(), g.edge_count()};
    auto d = degree_sequence(g);
    sig.insert(sig.end(), d.begin(), d.end());
    auto t = triangles_per_vertex(g);
    std::sort(t.begin(), t.end());
    sig.insert(sig.end(), t.begin(), t.end());
    std::vector<int> dists;
    for (int s = 0; s < g.n(); ++s) {
        auto row = bfs_distances(g, s);
        dists.insert(dists.end(), row.begin(), row.end());
    }
    std::sort(dists.begin(), dists.end());
    sig.insert(sig.end(), dists.begin(), dists.end());
    return sig;
}

namespace detail {

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    const std::vector<int>& order;       // a's vertices, most constrained first
    const std::vector<int>& deg_a;
    const std::vector<int>& deg_b;
    const std::vector<int>& tri_a;
    const std::vector<int>& tri_b;
    std::vector<int> map_ab;             // a-vertex -> b-vertex or -1
    Mask used_b = 0;

    bool run(std::size_t idx) {
        if (idx == order.size()) return true;
        int u = order[idx];
        for (int v = 0; v < b.n(); ++v) {
            if (used_b & bit(v)) continue;
            if (deg_a[static_cast<std::size_t>(u)] != deg_b[static_cast<std::size_t>(v)]) continue;
            if (tri_a[static_cast<std::size_t>(u)] != tri_b[static_cast<std::size_t>(v)]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < idx; ++j) {
                int w = order[j];
                if (a.has_edge(u, w) != b.has_edge(v, map_ab[static_cast<std::size_t>(w)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map_ab[static_cast<std::size_t>(u)] = v;
            used_b |= bit(v);
            if (run(idx + 1)) return true;
            used_b &= ~bit(v);
            map_ab[static_cast<std::size_t>(u)] = -1;
        }
        return false;
    }
};

}  // namespace detail

// Exact isomorphism test for small graphs: invariant prefilter, then
// backtracking over label assignments. Factorial in the worst case, hence the
// guard (default 12).
inline bool is_isomorphic(const Graph& a, const Graph& b, int limit = 12) {
    require(a.n() <= limit && b.n() <= limit, errc::size_limit_exceeded,
            "isomorphism test limited to " + std::to_string(limit) + " vertices");
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    if (degree_sequence(a) != degree_sequence(b)) return false;
    auto tri_a = triangles_per_vertex(a), tri_b = triangles_per_vertex(b);
    {
        auto sa = tri_a, sb = tri_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    auto deg_a = degrees(a), deg_b = degrees(b);
    // Most-constrained-first: high degree, then high triangle count.
    std::vector<int> order(static_cast<std::size_t>(a.n()));
    for (int i = 0; i < a.n(); ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        auto kx = std::make_tuple(-deg_a[static_cast<std::size_t>(x)], -tri_a[static_cast<std::size_t>(x)], x);
        auto ky = std::make_tuple(-deg_a[static_cast<std::size_t>(y)], -tri_a[static_cast<std::size_t>(y)], y);
        return kx < ky;
    });
    detail::IsoSearch search{a, b, order, deg_a, deg_b, tri_a, tri_b,
                             std::vector<int>(static_cast<std::size_t>(a.n()), -1)};
    return search.run(0);
}

// Partition indices 0..graphs.size()-1 into isomorphism classes; classes are
// ordered by smallest member, members ascending.
inline std::vector<std::vector<int>> group_by_isomorphism(const std::vector<Graph>& graphs, int limit = 12) {
    std::vector<std::vector<int>> classes;
    std::vector<std::vector<int>> signatures;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        auto sig = iso_signature(graphs[i]);
        bool placed = false;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            if (signatures[c] != sig) continue;
            if (is_isomorphic(graphs[static_cast<std::size_t>(classes[c][0])], graphs[i], limit)) {
                classes[c].push_back(static_cast<int>(i));
                placed = true;
                break;
            }
        }
        if (!placed) {
            classes.push_back({static_cast<int>(i)});
            signatures.push_back(std::move(sig));
        }
    }
    return classes;
}

// Dense-graph classification: requires min degree >= n/2. Under that
// hypothesis triangle-free and bipartite coincide, and the bipartite case is
// K_{n/2,n/2} exactly. The bound is inclusive: with a strict bound no
// bipartite graph could qualify at all (each side would need more than n/2
// vertices).
inline DenseClassification classify_dense_graph(const Graph& g) {
    require(2 * min_degree(g) >= g.n(), errc::precondition_violated,
            "classification requires min degree >= n/2");
    DenseClassification r{};
    r.triangle_free = !has_triangle(g);
    r.bipartite = is_bipartite(g).has_value();
    r.is_krr = false;
    if (r.bipartite && g.n() % 2 == 0)
        r.is_krr = is_isomorphic(g, complete_bipartite_graph(g.n() / 2, g.n() / 2), std::max(12, g.n()));
    return r;
}

}  // namespace gcsum
