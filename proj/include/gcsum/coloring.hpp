#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gcsum/graph.hpp"

namespace gcsum {

// Total assignment vertex -> color in 1..k. A *minimum proper coloring* in
// this library always uses exactly chi(G) colors, each at least once.
struct Coloring {
    std::vector<int> colors;  // colors[v] in 1..k
    int k = 0;

    bool operator==(const Coloring&) const = default;
};

inline bool colors_in_range(const Coloring& c) {
    for (int x : c.colors)
        if (x < 1 || x > c.k) return false;
    return true;
}

inline bool is_proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.n() || !colors_in_range(c)) return false;
    for (auto [u, v] : g.edges())
        if (c.colors[static_cast<std::size_t>(u)] == c.colors[static_cast<std::size_t>(v)]) return false;
    return true;
}

// theta[i-1] = number of vertices colored i.
inline std::vector<int> theta(const Coloring& c) {
    std::vector<int> t(static_cast<std::size_t>(c.k), 0);
    for (int x : c.colors) ++t[static_cast<std::size_t>(x - 1)];
    return t;
}

inline bool all_colors_used(const Coloring& c) {
    auto t = theta(c);
    return std::all_of(t.begin(), t.end(), [](int x) { return x >= 1; });
}

// omega(S) = sum over i of i * theta(c_i).
inline long color_sum(const Coloring& c) {
    long s = 0;
    for (int x : c.colors) s += x;
    return s;
}

// Transpose two color classes. Involution; preserves properness and the
// class-size multiset; changes the color sum by (t-k)*(theta_k - theta_t).
inline Coloring recolor_swap(const Coloring& c, int k, int t) {
    require(k >= 1 && k <= c.k && t >= 1 && t <= c.k, errc::index_out_of_range,
            "swap colors must lie in 1..k");
    Coloring out = c;
    for (int& x : out.colors) {
        if (x == k)
            x = t;
        else if (x == t)
            x = k;
    }
    return out;
}

}  // namespace gcsum
