#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcsum/errors.hpp"

namespace gcsum {

// Per-vertex adjacency bitmask. 64 bits bounds the representable order; the
// effective cap is the (smaller) runtime size limit below.
using Mask = std::uint64_t;

inline constexpr int max_vertices = 64;

namespace detail {
inline int& size_limit_storage() {
    static int limit = 24;
    return limit;
}
}  // namespace detail

// Runtime vertex cap. Everything downstream of graph construction is an
// exponential search, so the default is deliberately small.
inline int size_limit() { return detail::size_limit_storage(); }

inline void set_size_limit(int n) {
    require(n >= 1 && n <= max_vertices, errc::invalid_params,
            "size limit must be in [1, " + std::to_string(max_vertices) + "]");
    detail::size_limit_storage() = n;
}

inline Mask bit(int v) { return Mask{1} << v; }
inline Mask full_mask(int n) { return n >= max_vertices ? ~Mask{0} : (Mask{1} << n) - 1; }

using VertexPair = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Edge set plus per-vertex
// neighbor bitmasks; immutable after construction.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<VertexPair> edge_list) : n_(n) {
        require(n >= 1, errc::invalid_params, "graph order must be >= 1");
        require(n <= size_limit(), errc::size_limit_exceeded,
                "order " + std::to_string(n) + " exceeds size limit " + std::to_string(size_limit()));
        adj_.assign(static_cast<std::size_t>(n), 0);
        edges_.reserve(edge_list.size());
        for (auto [u, v] : edge_list) {
            require(u >= 0 && u < n && v >= 0 && v < n, errc::out_of_range,
                    "edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
            require(u != v, errc::loop, "self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
            require(!(adj_[static_cast<std::size_t>(u)] & bit(v)), errc::duplicate_edge,
                    "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
            adj_[static_cast<std::size_t>(u)] |= bit(v);
            adj_[static_cast<std::size_t>(v)] |= bit(u);
            edges_.emplace_back(u, v);
        }
        std::sort(edges_.begin(), edges_.end());
    }

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexPair>& edges() const { return edges_; }

    Mask adjacency(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool has_edge(int u, int v) const { return u != v && (adj_[static_cast<std::size_t>(u)] & bit(v)); }
    int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }
    Mask vertex_mask() const { return full_mask(n_); }

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    int n_ = 0;
    std::vector<VertexPair> edges_;
    std::vector<Mask> adj_;
};

// ---- named families ------------------------------------------------------

inline Graph path_graph(int n) {
    require(n >= 1, errc::invalid_params, "path needs n >= 1");
    std::vector<VertexPair> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle_graph(int n) {
    require(n >= 3, errc::invalid_params, "cycle needs n >= 3");
    std::vector<VertexPair> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

inline Graph complete_graph(int n) {
    require(n >= 1, errc::invalid_params, "complete graph needs n >= 1");
    std::vector<VertexPair> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

// X = 0..r-1, Y = r..r+s-1.
inline Graph complete_bipartite_graph(int r, int s) {
    require(r >= 1 && s >= 1, errc::invalid_params, "complete bipartite needs r,s >= 1");
    std::vector<VertexPair> e;
    for (int u = 0; u < r; ++u)
        for (int v = 0; v < s; ++v) e.emplace_back(u, r + v);
    return Graph(r + s, e);
}

inline Graph empty_graph(int n) { return Graph(n, {}); }

// ---- elementary queries ---------------------------------------------------

inline Graph complement(const Graph& g) {
    std::vector<VertexPair> e;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) e.emplace_back(u, v);
    return Graph(g.n(), e);
}

inline std::vector<int> degrees(const Graph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
    return d;
}

// Sorted descending, the usual convention.
inline std::vector<int> degree_sequence(const Graph& g) {
    auto d = degrees(g);
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

inline int min_degree(const Graph& g) {
    int m = g.n();
    for (int v = 0; v < g.n(); ++v) m = std::min(m, g.degree(v));
    return m;
}

inline int max_degree(const Graph& g) {
    int m = 0;
    for (int v = 0; v < g.n(); ++v) m = std::max(m, g.degree(v));
    return m;
}

// Keeps exactly the internal edges; relabels to 0..|S|-1 preserving the input
// order of S.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        int v = s[i];
        require(v >= 0 && v < g.n(), errc::out_of_range, "subgraph vertex out of range");
        require(pos[static_cast<std::size_t>(v)] < 0, errc::invalid_params, "repeated vertex in subgraph set");
        pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<VertexPair> e;
    for (auto [u, v] : g.edges()) {
        int pu = pos[static_cast<std::size_t>(u)], pv = pos[static_cast<std::size_t>(v)];
        if (pu >= 0 && pv >= 0) e.emplace_back(std::min(pu, pv), std::max(pu, pv));
    }
    require(!s.empty(), errc::invalid_params, "subgraph set must be nonempty");
    return Graph(static_cast<int>(s.size()), e);
}

// perm[v] = new label of v; perm must be a bijection on 0..n-1.
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    require(static_cast<int>(perm.size()) == g.n(), errc::invalid_params, "permutation size mismatch");
    Mask seen = 0;
    for (int p : perm) {
        require(p >= 0 && p < g.n() && !(seen & bit(p)), errc::invalid_params, "not a permutation");
        seen |= bit(p);
    }
    std::vector<VertexPair> e;
    for (auto [u, v] : g.edges()) {
        int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(v)];
        e.emplace_back(std::min(a, b), std::max(a, b));
    }
    return Graph(g.n(), e);
}

// BFS over bitmasks; -1 marks unreachable.
inline std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    Mask frontier = bit(src), seen = bit(src);
    int d = 0;
    while (frontier) {
        Mask m = frontier;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            dist[static_cast<std::size_t>(v)] = d;
        }
        Mask next = 0;
        Mask f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.adjacency(v);
        }
        frontier = next & ~seen;
        seen |= next;
        ++d;
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    if (g.n() == 1) return true;
    Mask reached = bit(0), frontier = bit(0);
    while (frontier) {
        Mask next = 0;
        Mask f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.adjacency(v);
        }
        frontier = next & ~reached;
        reached |= frontier;
    }
    return reached == g.vertex_mask();
}

// nullopt = infinite (disconnected).
inline std::optional<int> diameter(const Graph& g) {
    int best = 0;
    for (int s = 0; s < g.n(); ++s) {
        auto dist = bfs_distances(g, s);
        for (int v = 0; v < g.n(); ++v) {
            if (dist[static_cast<std::size_t>(v)] < 0) return std::nullopt;
            best = std::max(best, dist[static_cast<std::size_t>(v)]);
        }
    }
    return best;
}

inline bool has_triangle(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.adjacency(u) & g.adjacency(v)) return true;
    return false;
}

inline std::vector<int> triangles_per_vertex(const Graph& g) {
    std::vector<int> t(static_cast<std::size_t>(g.n()), 0);
    for (auto [u, v] : g.edges()) {
        Mask common = g.adjacency(u) & g.adjacency(v);
        while (common) {
            int w = std::countr_zero(common);
            common &= common - 1;
            if (w > v) {  // count each triangle once per vertex triple
                ++t[static_cast<std::size_t>(u)];
                ++t[static_cast<std::size_t>(v)];
                ++t[static_cast<std::size_t>(w)];
            }
        }
    }
    return t;
}

// X, Y sorted ascending; X holds the least vertex of each component.
struct BipartitePartition {
    std::vector<int> X, Y;
};

inline std::optional<BipartitePartition> is_bipartite(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.n()), -1);
    for (int root = 0; root < g.n(); ++root) {
        if (side[static_cast<std::size_t>(root)] >= 0) continue;
        side[static_cast<std::size_t>(root)] = 0;
        std::vector<int> queue{root};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            Mask nb = g.adjacency(v);
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (side[static_cast<std::size_t>(w)] < 0) {
                    side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    BipartitePartition p;
    for (int v = 0; v < g.n(); ++v) (side[static_cast<std::size_t>(v)] == 0 ? p.X : p.Y).push_back(v);
    return p;
}

// Throws unless X,Y partition V(B) with no internal edges.
inline void validate_partition(const Graph& b, const BipartitePartition& p) {
    Mask mx = 0, my = 0;
    for (int v : p.X) {
        require(v >= 0 && v < b.n() && !(mx & bit(v)), errc::invalid_partition, "X is not a vertex set");
        mx |= bit(v);
    }
    for (int v : p.Y) {
        require(v >= 0 && v < b.n() && !(my & bit(v)), errc::invalid_partition, "Y is not a vertex set");
        my |= bit(v);
    }
    require((mx & my) == 0 && (mx | my) == b.vertex_mask(), errc::invalid_partition,
            "X,Y must partition the vertex set");
    for (auto [u, v] : b.edges())
        require(((mx & bit(u)) != 0) != ((mx & bit(v)) != 0), errc::invalid_partition,
                "edge inside one side of the partition");
}

// ---- structural checks ----------------------------------------------------

struct MinDegreeDiameterCheck {
    bool applicable;  // min degree > n/2
    bool holds;       // diameter <= 2
};

// applicable implies holds, for every graph.
inline MinDegreeDiameterCheck check_lemma_4_1(const Graph& g) {
    bool applicable = 2 * min_degree(g) > g.n();
    auto d = diameter(g);
    return {applicable, d.has_value() && *d <= 2};
}

struct DenseClassification {
    bool triangle_free;
    bool bipartite;
    bool is_krr;  // isomorphic to K_{n/2,n/2}
};

// ---- Hamiltonian searches (backtracking; complements of sparse graphs are
// dense, so these terminate quickly at desk scale) ---------------------------

namespace detail {

inline bool extend_ham_path(const Graph& g, std::vector<int>& path, Mask used) {
    if (static_cast<int>(path.size()) == g.n()) return true;
    Mask cand = g.adjacency(path.back()) & ~used;
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        path.push_back(v);
        if (extend_ham_path(g, path, used | bit(v))) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace detail

inline std::optional<std::vector<int>> hamiltonian_path(const Graph& g) {
    if (g.n() == 1) return std::vector<int>{0};
    for (int s = 0; s < g.n(); ++s) {
        std::vector<int> path{s};
        if (detail::extend_ham_path(g, path, bit(s))) return path;
    }
    return std::nullopt;
}

inline std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g) {
    if (g.n() < 3) return std::nullopt;
    // Fix vertex 0 as the start; the cycle closes back to it.
    std::vector<int> path{0};
    Mask used = bit(0);
    struct Rec {
        const Graph& g;
        std::vector<int>& path;
        bool run(Mask used) {
            if (static_cast<int>(path.size()) == g.n()) return g.has_edge(path.back(), path.front());
            Mask cand = g.adjacency(path.back()) & ~used;
            while (cand) {
                int v = std::countr_zero(cand);
                cand &= cand - 1;
                path.push_back(v);
                if (run(used | bit(v))) return true;
                path.pop_back();
            }
            return false;
        }
    } rec{g, path};
    if (rec.run(used)) return path;
    return std::nullopt;
}

}  // namespace gcsum
