#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gcsum/coloring.hpp"
#include "gcsum/extension.hpp"
#include "gcsum/graph.hpp"

namespace gcsum {

namespace detail {

// Greedy clique through highest-degree seeds; a lower bound for chi.
inline int clique_lower_bound(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::make_pair(-g.degree(a), a) < std::make_pair(-g.degree(b), b);
    });
    int best = 1;
    for (int seed : order) {
        Mask cand = g.adjacency(seed);
        int size = 1;
        Mask clique = bit(seed);
        while (cand) {
            // take the candidate with most neighbors inside the candidate set
            int pick = -1, pick_score = -1;
            Mask m = cand;
            while (m) {
                int v = std::countr_zero(m);
                m &= m - 1;
                int score = std::popcount(g.adjacency(v) & cand);
                if (score > pick_score) pick = v, pick_score = score;
            }
            clique |= bit(pick);
            ++size;
            cand &= g.adjacency(pick);
        }
        best = std::max(best, size);
    }
    return best;
}

inline int greedy_coloring_upper_bound(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::make_pair(-g.degree(a), a) < std::make_pair(-g.degree(b), b);
    });
    std::vector<int> color(static_cast<std::size_t>(g.n()), 0);
    int used = 0;
    for (int v : order) {
        Mask nb = g.adjacency(v);
        std::uint32_t taken = 0;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (color[static_cast<std::size_t>(w)]) taken |= 1u << (color[static_cast<std::size_t>(w)] - 1);
        }
        int c = std::countr_zero(~taken) + 1;
        color[static_cast<std::size_t>(v)] = c;
        used = std::max(used, c);
    }
    return used;
}

// Backtracking k-colorability in a fixed vertex order, new colors introduced
// in increasing order to break color symmetry.
struct KColorSearch {
    const Graph& g;
    const std::vector<int>& order;
    int k;
    std::vector<int>& color;

    bool run(std::size_t idx, int used) {
        if (idx == order.size()) return true;
        int v = order[idx];
        Mask nb = g.adjacency(v);
        std::uint32_t taken = 0;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (color[static_cast<std::size_t>(w)]) taken |= 1u << (color[static_cast<std::size_t>(w)] - 1);
        }
        int limit = std::min(k, used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (taken & (1u << (c - 1))) continue;
            color[static_cast<std::size_t>(v)] = c;
            if (run(idx + 1, std::max(used, c))) return true;
            color[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    }
};

inline std::vector<int> degree_desc_order(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::make_pair(-g.degree(a), a) < std::make_pair(-g.degree(b), b);
    });
    return order;
}

}  // namespace detail

// First proper k-coloring found in the deterministic search order, if any.
inline std::optional<Coloring> find_coloring(const Graph& g, int k) {
    require(k >= 1, errc::invalid_params, "color count must be positive");
    auto order = detail::degree_desc_order(g);
    std::vector<int> color(static_cast<std::size_t>(g.n()), 0);
    detail::KColorSearch search{g, order, k, color};
    if (!search.run(0, 0)) return std::nullopt;
    return Coloring{color, k};
}

// Exact chromatic number by incremental k-colorability between a greedy
// clique lower bound and a greedy coloring upper bound.
inline int chromatic_number(const Graph& g) {
    require(g.n() <= size_limit(), errc::size_limit_exceeded, "chromatic number limited to size limit");
    if (g.edge_count() == 0) return 1;
    if (auto p = is_bipartite(g)) return 2;
    int lo = std::max(3, detail::clique_lower_bound(g));
    int hi = detail::greedy_coloring_upper_bound(g);
    for (int k = lo; k < hi; ++k)
        if (find_coloring(g, k)) return k;
    return hi;
}

// Exact min and max of the color sum over all proper colorings that use
// exactly chi(G) colors.
struct SumReport {
    int chi = 0;
    long chi_sum_min = 0;
    long chi_sum_max = 0;
    Coloring witness_min;
    Coloring witness_max;
};

namespace detail {

// Enumerates partitions of V into exactly chi nonempty independent sets
// (colorings modulo color permutation) in restricted-growth order. For a
// fixed partition the rearrangement inequality gives the best and worst
// assignment of color indices: sizes descending for the minimum, ascending
// for the maximum. Partial branches are cut with the bounds
//   min completion >= rearrangement-min(current sizes) + remaining
//   max completion <= rearrangement-max(current sizes) + remaining * chi.
struct PartitionSearch {
    const Graph& g;
    int chi;
    std::vector<Mask> class_mask;
    std::vector<int> class_size;
    long best_min = std::numeric_limits<long>::max();
    long best_max = std::numeric_limits<long>::min();
    std::vector<Mask> argmin, argmax;

    PartitionSearch(const Graph& graph, int colors) : g(graph), chi(colors) {}

    static long rearranged(const std::vector<int>& sizes, bool ascending) {
        auto s = sizes;
        std::sort(s.begin(), s.end());
        if (!ascending) std::reverse(s.begin(), s.end());
        long total = 0;
        for (std::size_t i = 0; i < s.size(); ++i) total += static_cast<long>(i + 1) * s[i];
        return total;
    }

    void leaf() {
        long lo = rearranged(class_size, false);
        long hi = rearranged(class_size, true);
        if (lo < best_min) {
            best_min = lo;
            argmin = class_mask;
        }
        if (hi > best_max) {
            best_max = hi;
            argmax = class_mask;
        }
    }

    void run(int v) {
        const int n = g.n();
        if (v == n) {
            if (static_cast<int>(class_mask.size()) == chi) leaf();
            return;
        }
        const int remaining = n - v;
        const int open = static_cast<int>(class_mask.size());
        if (open + remaining < chi) return;  // cannot reach chi classes
        {
            // bound pruning
            std::vector<int> s = class_size;
            std::sort(s.begin(), s.end(), std::greater<int>());
            long assigned_min = 0, assigned_max = 0;
            for (std::size_t i = 0; i < s.size(); ++i) {
                assigned_min += static_cast<long>(i + 1) * s[i];
                assigned_max += static_cast<long>(chi - static_cast<int>(i)) * s[i];
            }
            long lb = assigned_min + remaining;
            long ub = assigned_max + static_cast<long>(remaining) * chi;
            if (lb >= best_min && ub <= best_max) return;
        }
        for (int j = 0; j < open; ++j) {
            if (g.adjacency(v) & class_mask[static_cast<std::size_t>(j)]) continue;
            class_mask[static_cast<std::size_t>(j)] |= bit(v);
            ++class_size[static_cast<std::size_t>(j)];
            run(v + 1);
            --class_size[static_cast<std::size_t>(j)];
            class_mask[static_cast<std::size_t>(j)] &= ~bit(v);
        }
        if (open < chi) {
            class_mask.push_back(bit(v));
            class_size.push_back(1);
            run(v + 1);
            class_mask.pop_back();
            class_size.pop_back();
        }
    }
};

// Turn a witness partition into a coloring: color i+1 goes to the class
// ranked i under the given size order (stable on the least vertex).
inline Coloring coloring_from_partition(const std::vector<Mask>& classes, int n, bool ascending) {
    std::vector<int> idx(classes.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        int sa = std::popcount(classes[static_cast<std::size_t>(a)]);
        int sb = std::popcount(classes[static_cast<std::size_t>(b)]);
        if (sa != sb) return ascending ? sa < sb : sa > sb;
        return std::countr_zero(classes[static_cast<std::size_t>(a)]) <
               std::countr_zero(classes[static_cast<std::size_t>(b)]);
    });
    Coloring c;
    c.k = static_cast<int>(classes.size());
    c.colors.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t rank = 0; rank < idx.size(); ++rank) {
        Mask m = classes[static_cast<std::size_t>(idx[rank])];
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            c.colors[static_cast<std::size_t>(v)] = static_cast<int>(rank) + 1;
        }
    }
    return c;
}

}  // namespace detail

inline SumReport chi_sums(const Graph& g) {
    require(g.n() <= size_limit(), errc::size_limit_exceeded, "chromatic sums limited to size limit");
    SumReport r;
    r.chi = chromatic_number(g);
    detail::PartitionSearch search(g, r.chi);
    search.run(0);
    r.chi_sum_min = search.best_min;
    r.chi_sum_max = search.best_max;
    r.witness_min = detail::coloring_from_partition(search.argmin, g.n(), false);
    r.witness_max = detail::coloring_from_partition(search.argmax, g.n(), true);
    return r;
}

// Min over extensions of the minimum sum, max over extensions of the maximum,
// evaluated on one representative per isomorphism class.
struct ExtensionSumsReport {
    struct ClassRow {
        int representative = 0;          // index into the extension list
        std::vector<int> members;
        int chi = 0;
        long chi_sum_min = 0;
        long chi_sum_max = 0;
    };

    long chi_sum_min = 0;
    long chi_sum_max = 0;
    int min_extension = -1;  // representative attaining the min
    int max_extension = -1;
    Coloring witness_min;
    Coloring witness_max;
    std::vector<ClassRow> per_class;
};

inline ExtensionSumsReport chi_sums_over_extensions_of(const ExtensionSet& ext) {
    require(!ext.matchings.empty(), errc::no_extension_exists,
            "the complement has no perfect matching");
    ExtensionSumsReport out;
    out.chi_sum_min = std::numeric_limits<long>::max();
    out.chi_sum_max = std::numeric_limits<long>::min();
    for (const auto& cls : ext.iso_classes) {
        int rep = cls.front();
        SumReport rr = chi_sums(ext.graphs[static_cast<std::size_t>(rep)]);
        out.per_class.push_back({rep, cls, rr.chi, rr.chi_sum_min, rr.chi_sum_max});
        if (rr.chi_sum_min < out.chi_sum_min) {
            out.chi_sum_min = rr.chi_sum_min;
            out.min_extension = rep;
            out.witness_min = rr.witness_min;
        }
        if (rr.chi_sum_max > out.chi_sum_max) {
            out.chi_sum_max = rr.chi_sum_max;
            out.max_extension = rep;
            out.witness_max = rr.witness_max;
        }
    }
    return out;
}

inline ExtensionSumsReport chi_sums_over_extensions(const Graph& g) {
    return chi_sums_over_extensions_of(complete_extensions(g));
}

}  // namespace gcsum
