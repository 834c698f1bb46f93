#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gcsum/graph.hpp"
#include "gcsum/matching.hpp"

namespace gcsum::oracle {

// Deliberately unoptimized reference implementations over raw assignment /
// permutation / pairing enumeration, structurally unlike the main algorithms.
// Testing and verification support only.

namespace detail {

// All k^n assignments, cut only on immediate edge conflicts with earlier
// vertices. No color-symmetry reduction on purpose.
template <typename Leaf>
inline void for_each_proper_assignment(const Graph& g, int k, std::vector<int>& col, int v, Leaf&& leaf) {
    if (v == g.n()) {
        leaf(col);
        return;
    }
    for (int c = 1; c <= k; ++c) {
        bool ok = true;
        Mask nb = g.adjacency(v) & full_mask(v);
        while (nb && ok) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (col[static_cast<std::size_t>(w)] == c) ok = false;
        }
        if (!ok) continue;
        col[static_cast<std::size_t>(v)] = c;
        for_each_proper_assignment(g, k, col, v + 1, leaf);
    }
    col[static_cast<std::size_t>(v)] = 0;
}

inline bool has_proper_assignment(const Graph& g, int k) {
    bool found = false;
    std::vector<int> col(static_cast<std::size_t>(g.n()), 0);
    struct Rec {
        const Graph& g;
        int k;
        std::vector<int>& col;
        bool run(int v) {
            if (v == g.n()) return true;
            for (int c = 1; c <= k; ++c) {
                bool ok = true;
                Mask nb = g.adjacency(v) & full_mask(v);
                while (nb && ok) {
                    int w = std::countr_zero(nb);
                    nb &= nb - 1;
                    if (col[static_cast<std::size_t>(w)] == c) ok = false;
                }
                if (!ok) continue;
                col[static_cast<std::size_t>(v)] = c;
                if (run(v + 1)) return true;
            }
            col[static_cast<std::size_t>(v)] = 0;
            return false;
        }
    } rec{g, k, col};
    found = rec.run(0);
    return found;
}

}  // namespace detail

inline int brute_chi(const Graph& g) {
    require(g.n() <= 10, errc::size_limit_exceeded, "brute chi limited to n <= 10");
    for (int k = 1; k < g.n(); ++k)
        if (detail::has_proper_assignment(g, k)) return k;
    return g.n();
}

// Min and max color sum over all proper colorings with exactly brute_chi(g)
// colors, every color used.
inline std::pair<long, long> brute_chi_sums(const Graph& g) {
    require(g.n() <= 10, errc::size_limit_exceeded, "brute chromatic sums limited to n <= 10");
    const int k = brute_chi(g);
    long lo = -1, hi = -1;
    std::vector<int> col(static_cast<std::size_t>(g.n()), 0);
    detail::for_each_proper_assignment(g, k, col, 0, [&](const std::vector<int>& c) {
        std::uint32_t used = 0;
        long sum = 0;
        for (int x : c) {
            used |= 1u << (x - 1);
            sum += x;
        }
        if (used != (1u << k) - 1) return;  // not surjective
        if (lo < 0 || sum < lo) lo = sum;
        if (hi < 0 || sum > hi) hi = sum;
    });
    return {lo, hi};
}

// Filter all ways of partitioning 0..n-1 into pairs by edge membership.
inline std::vector<Matching> brute_perfect_matchings(const Graph& g) {
    require(g.n() <= 12, errc::size_limit_exceeded, "brute matching enumeration limited to n <= 12");
    std::vector<Matching> out;
    if (g.n() % 2 != 0) return out;
    std::vector<VertexPair> acc;
    struct Rec {
        const Graph& g;
        std::vector<VertexPair>& acc;
        std::vector<Matching>& out;
        void run(Mask covered) {
            if (covered == g.vertex_mask()) {
                for (auto [u, v] : acc)
                    if (!g.has_edge(u, v)) return;
                out.push_back(Matching{acc});
                return;
            }
            int u = std::countr_zero(~covered);
            for (int v = u + 1; v < g.n(); ++v) {  // every pairing, edges or not
                if (covered & bit(v)) continue;
                acc.emplace_back(u, v);
                run(covered | bit(u) | bit(v));
                acc.pop_back();
            }
        }
    } rec{g, acc, out};
    rec.run(0);
    return out;
}

// Scan all n! bijections.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
    require(a.n() <= 8 && b.n() <= 8, errc::size_limit_exceeded, "brute isomorphism limited to n <= 8");
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(static_cast<std::size_t>(a.n()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges()) {
            if (!b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Branch on the lowest uncovered left vertex: match it to any free neighbor
// or leave it unmatched.
inline int brute_max_matching(const Graph& b, const BipartitePartition& p) {
    validate_partition(b, p);
    struct Rec {
        const Graph& b;
        const std::vector<int>& xs;
        int run(std::size_t i, Mask used) {
            if (i == xs.size()) return 0;
            int x = xs[i];
            int best = run(i + 1, used);  // leave x unmatched
            Mask cand = b.adjacency(x) & ~used;
            while (cand) {
                int y = std::countr_zero(cand);
                cand &= cand - 1;
                best = std::max(best, 1 + run(i + 1, used | bit(y)));
            }
            return best;
        }
    } rec{b, p.X};
    return rec.run(0, 0);
}

// Hall's condition for N^c by explicit subset enumeration.
inline bool hall_condition_subsets(const Graph& b, const BipartitePartition& p) {
    validate_partition(b, p);
    require(p.X.size() <= 6, errc::size_limit_exceeded, "subset oracle limited to |X| <= 6");
    Mask y_mask = 0;
    for (int y : p.Y) y_mask |= bit(y);
    const std::size_t nx = p.X.size();
    for (std::size_t s = 1; s < (std::size_t{1} << nx); ++s) {
        Mask nc = 0;
        int size = 0;
        for (std::size_t i = 0; i < nx; ++i) {
            if (!(s & (std::size_t{1} << i))) continue;
            ++size;
            nc |= y_mask & ~b.adjacency(p.X[i]);
        }
        if (std::popcount(nc) < size) return false;
    }
    return true;
}

}  // namespace gcsum::oracle
