#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "gcsum/graph.hpp"

namespace gcsum {

// Pairwise vertex-disjoint unordered pairs, normalized (u < v, sorted).
struct Matching {
    std::vector<VertexPair> pairs;

    bool operator==(const Matching&) const = default;

    int size() const { return static_cast<int>(pairs.size()); }

    Mask covered() const {
        Mask m = 0;
        for (auto [u, v] : pairs) m |= bit(u) | bit(v);
        return m;
    }

    bool is_perfect(int n) const { return covered() == full_mask(n) && 2 * size() == n; }
};

inline Matching normalized_matching(std::vector<VertexPair> pairs) {
    for (auto& [u, v] : pairs)
        if (u > v) std::swap(u, v);
    std::sort(pairs.begin(), pairs.end());
    return Matching{std::move(pairs)};
}

namespace detail {

// Backtrack on the lowest-indexed uncovered vertex; partners ascending. The
// accumulated pair list is therefore already sorted and the output order is
// lexicographic with no duplicates.
inline bool enumerate_pm_rec(const Graph& g, Mask covered, std::vector<VertexPair>& acc,
                             const std::function<bool(const Matching&)>& visit) {
    if (covered == g.vertex_mask()) return visit(Matching{acc});
    int u = std::countr_zero(~covered);
    Mask cand = g.adjacency(u) & ~covered;
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        acc.emplace_back(u, v);
        bool keep_going = enumerate_pm_rec(g, covered | bit(u) | bit(v), acc, visit);
        acc.pop_back();
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace detail

// Visit every perfect matching of g in lexicographic order; the visitor
// returns false to stop early. Odd order visits nothing.
inline void enumerate_perfect_matchings(const Graph& g, const std::function<bool(const Matching&)>& visit) {
    require(g.n() <= size_limit(), errc::size_limit_exceeded,
            "perfect matching enumeration limited to size limit");
    if (g.n() % 2 != 0) return;
    std::vector<VertexPair> acc;
    detail::enumerate_pm_rec(g, 0, acc, visit);
}

inline std::vector<Matching> enumerate_perfect_matchings(const Graph& g) {
    std::vector<Matching> out;
    enumerate_perfect_matchings(g, [&](const Matching& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

inline std::optional<Matching> first_perfect_matching(const Graph& g) {
    std::optional<Matching> found;
    enumerate_perfect_matchings(g, [&](const Matching& m) {
        found = m;
        return false;
    });
    return found;
}

namespace detail {

// Hopcroft-Karp on an explicit bipartite adjacency list (left index ->
// right indices). Returns match_left (right partner index or -1).
inline std::vector<int> hopcroft_karp_core(int nl, int nr, const std::vector<std::vector<int>>& adj) {
    constexpr int inf = std::numeric_limits<int>::max();
    std::vector<int> match_l(static_cast<std::size_t>(nl), -1), match_r(static_cast<std::size_t>(nr), -1);
    std::vector<int> dist(static_cast<std::size_t>(nl), 0);

    auto bfs = [&]() {
        std::queue<int> q;
        for (int u = 0; u < nl; ++u) {
            if (match_l[static_cast<std::size_t>(u)] < 0) {
                dist[static_cast<std::size_t>(u)] = 0;
                q.push(u);
            } else {
                dist[static_cast<std::size_t>(u)] = inf;
            }
        }
        bool found_free = false;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                int w = match_r[static_cast<std::size_t>(v)];
                if (w < 0) {
                    found_free = true;
                } else if (dist[static_cast<std::size_t>(w)] == inf) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    q.push(w);
                }
            }
        }
        return found_free;
    };

    std::function<bool(int)> dfs = [&](int u) {
        for (int v : adj[static_cast<std::size_t>(u)]) {
            int w = match_r[static_cast<std::size_t>(v)];
            if (w < 0 || (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(u)] + 1 && dfs(w))) {
                match_l[static_cast<std::size_t>(u)] = v;
                match_r[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        dist[static_cast<std::size_t>(u)] = inf;
        return false;
    };

    while (bfs())
        for (int u = 0; u < nl; ++u)
            if (match_l[static_cast<std::size_t>(u)] < 0) dfs(u);
    return match_l;
}

}  // namespace detail

// Maximum-cardinality matching of the bipartite graph b under partition p.
inline Matching hopcroft_karp(const Graph& b, const BipartitePartition& p) {
    validate_partition(b, p);
    const int nl = static_cast<int>(p.X.size()), nr = static_cast<int>(p.Y.size());
    std::vector<int> ypos(static_cast<std::size_t>(b.n()), -1);
    for (int j = 0; j < nr; ++j) ypos[static_cast<std::size_t>(p.Y[static_cast<std::size_t>(j)])] = j;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nl));
    for (int i = 0; i < nl; ++i) {
        Mask nb = b.adjacency(p.X[static_cast<std::size_t>(i)]);
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            adj[static_cast<std::size_t>(i)].push_back(ypos[static_cast<std::size_t>(w)]);
        }
    }
    auto match_l = detail::hopcroft_karp_core(nl, nr, adj);
    std::vector<VertexPair> pairs;
    for (int i = 0; i < nl; ++i)
        if (match_l[static_cast<std::size_t>(i)] >= 0)
            pairs.emplace_back(p.X[static_cast<std::size_t>(i)],
                               p.Y[static_cast<std::size_t>(match_l[static_cast<std::size_t>(i)])]);
    return normalized_matching(std::move(pairs));
}

// Cross pairs (x, y), x in X, y in Y, pairwise bi-distinct and non-adjacent.
// ell is maximum over all such pairings.
struct BiDistinctPairing {
    std::vector<VertexPair> pairs;  // (x, y) ordered, sorted by x
    int ell = 0;
};

// ell = maximum matching in the X-Y non-adjacency graph; the witness pairing
// comes from the same matching.
inline BiDistinctPairing max_bidistinct_pairs(const Graph& b, const BipartitePartition& p) {
    validate_partition(b, p);
    const int nl = static_cast<int>(p.X.size()), nr = static_cast<int>(p.Y.size());
    std::vector<std::vector<int>> non_adj(static_cast<std::size_t>(nl));
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nr; ++j)
            if (!b.has_edge(p.X[static_cast<std::size_t>(i)], p.Y[static_cast<std::size_t>(j)]))
                non_adj[static_cast<std::size_t>(i)].push_back(j);
    auto match_l = detail::hopcroft_karp_core(nl, nr, non_adj);
    BiDistinctPairing out;
    for (int i = 0; i < nl; ++i)
        if (match_l[static_cast<std::size_t>(i)] >= 0)
            out.pairs.emplace_back(p.X[static_cast<std::size_t>(i)],
                                   p.Y[static_cast<std::size_t>(match_l[static_cast<std::size_t>(i)])]);
    std::sort(out.pairs.begin(), out.pairs.end());
    out.ell = static_cast<int>(out.pairs.size());
    return out;
}

// Hall's condition for the complement neighborhoods N^c: every S subset of X
// satisfies |N^c(S)| >= |S|. Equivalent to a perfect matching in the
// non-adjacency graph when |X| = |Y|.
inline bool hall_condition_nc(const Graph& b, const BipartitePartition& p) {
    validate_partition(b, p);
    require(p.X.size() == p.Y.size(), errc::unbalanced_partition,
            "Hall check requires |X| = |Y|");
    return max_bidistinct_pairs(b, p).ell == static_cast<int>(p.X.size());
}

}  // namespace gcsum
