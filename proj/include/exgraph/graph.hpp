#ifndef EXGRAPH_GRAPH_HPP
#define EXGRAPH_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace exg {

using Edge = std::pair<int, int>;

/// Thrown when an input exceeds a documented exact-computation limit.
/// Limits are hard errors: this tool never degrades to a heuristic.
class UnsupportedSizeError : public std::runtime_error {
public:
    explicit UnsupportedSizeError(const std::string& what) : std::runtime_error(what) {}
};

/// Immutable simple undirected graph on vertices 0..n-1 with dense
/// adjacency rows (one 64-bit word per 64 vertices). All operations that
/// "modify" a graph return a new value.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(std::size_t(n) * words_, 0) {
        if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    }

    static Graph from_edges(int n, const std::vector<Edge>& edges) {
        Graph g(n);
        for (const auto& [u, v] : edges) g.add_edge_checked(u, v);
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return edges_; }
    int row_words() const { return words_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (bits_[std::size_t(u) * words_ + v / 64] >> (v % 64)) & 1;
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
        return d;
    }

    int min_degree() const {
        int d = n_ > 0 ? degree(0) : 0;
        for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    const std::uint64_t* row(int v) const { return bits_.data() + std::size_t(v) * words_; }

    /// First adjacency word of v; valid whenever n <= 64.
    std::uint64_t row64(int v) const { return bits_[std::size_t(v) * words_]; }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        for_each_neighbor(v, [&](int u) { out.push_back(u); });
        return out;
    }

    template <typename Fn>
    void for_each_neighbor(int v, Fn&& fn) const {
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t m = r[w];
            while (m) {
                int b = std::countr_zero(m);
                fn(w * 64 + b);
                m &= m - 1;
            }
        }
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edges_);
        for (int u = 0; u < n_; ++u)
            for_each_neighbor(u, [&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    std::vector<int> degree_sequence() const {
        std::vector<int> d(n_);
        for (int v = 0; v < n_; ++v) d[v] = degree(v);
        return d;
    }

    /// New graph with one extra vertex (label n) adjacent to the set bits of
    /// `nbrs`. Requires n < 64 in the parent; used by the enumerator.
    Graph extended(std::uint64_t nbrs) const {
        Graph g(n_ + 1);
        for (int v = 0; v < n_; ++v) {
            const std::uint64_t* src = row(v);
            std::uint64_t* dst = g.bits_.data() + std::size_t(v) * g.words_;
            for (int w = 0; w < words_; ++w) dst[w] = src[w];
        }
        g.edges_ = edges_;
        std::uint64_t m = nbrs;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            g.add_edge_unchecked(v, n_);
        }
        return g;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    }

    void add_edge_checked(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (!has_edge(u, v)) add_edge_unchecked(u, v);
    }

    void add_edge_unchecked(int u, int v) {
        bits_[std::size_t(u) * words_ + v / 64] |= std::uint64_t(1) << (v % 64);
        bits_[std::size_t(v) * words_ + u / 64] |= std::uint64_t(1) << (u % 64);
        ++edges_;
    }

    friend Graph graph_from_edges(int, const std::vector<Edge>&);
    friend class GraphBuilder;

    int n_ = 0;
    int words_ = 0;
    int edges_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Mutable scratch builder for the construction generators; the result is
/// frozen into a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}

    void add_edge(int u, int v) { g_.add_edge_checked(u, v); }
    int vertex_count() const { return g_.vertex_count(); }
    Graph build() && { return std::move(g_); }

private:
    Graph g_;
};

inline Graph graph_from_edges(int n, const std::vector<Edge>& edges) {
    return Graph::from_edges(n, edges);
}

/// A 2-coloring certificate: X and Y are disjoint sorted vertex lists and
/// every certified edge joins X to Y.
struct Bipartition {
    std::vector<int> X;
    std::vector<int> Y;
};

/// Proper 2-coloring of every component, or nullopt if an odd cycle exists.
/// Component roots are scanned in ascending order and always colored into X,
/// so the certificate is deterministic.
inline std::optional<Bipartition> is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<signed char> color(n, -1);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            bool odd = false;
            g.for_each_neighbor(u, [&](int v) {
                if (color[v] == -1) {
                    color[v] = static_cast<signed char>(1 - color[u]);
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    odd = true;
                }
            });
            if (odd) return std::nullopt;
        }
    }
    Bipartition b;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? b.X : b.Y).push_back(v);
    return b;
}

/// Checks that (X, Y) is a valid 2-coloring of g covering all vertices.
inline bool check_bipartition(const Graph& g, const Bipartition& b) {
    const int n = g.vertex_count();
    std::vector<signed char> side(n, -1);
    for (int v : b.X) {
        if (v < 0 || v >= n || side[v] != -1) return false;
        side[v] = 0;
    }
    for (int v : b.Y) {
        if (v < 0 || v >= n || side[v] != -1) return false;
        side[v] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (side[v] == -1) return false;
    for (const auto& [u, v] : g.edges())
        if (side[u] == side[v]) return false;
    return true;
}

/// Induced subgraph on the vertices NOT in `removed`, relabeled to
/// 0..n-|S|-1 by order-preserving compaction.
inline Graph delete_vertices(const Graph& g, const std::vector<int>& removed) {
    const int n = g.vertex_count();
    std::vector<bool> gone(n, false);
    for (int v : removed) {
        if (v < 0 || v >= n) throw std::invalid_argument("delete_vertices: vertex out of range");
        gone[v] = true;
    }
    std::vector<int> relabel(n, -1);
    int m = 0;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) relabel[v] = m++;
    GraphBuilder b(m);
    for (const auto& [u, v] : g.edges())
        if (!gone[u] && !gone[v]) b.add_edge(relabel[u], relabel[v]);
    return std::move(b).build();
}

/// Same graph minus the listed edges; labels preserved.
inline Graph delete_edges(const Graph& g, const std::vector<Edge>& removed) {
    for (const auto& [u, v] : removed)
        if (!g.has_edge(u, v)) throw std::invalid_argument("delete_edges: edge not present");
    Graph h(g.vertex_count());
    GraphBuilder b(g.vertex_count());
    auto is_removed = [&](int u, int v) {
        for (const auto& [a, c] : removed)
            if ((a == u && c == v) || (a == v && c == u)) return true;
        return false;
    };
    for (const auto& [u, v] : g.edges())
        if (!is_removed(u, v)) b.add_edge(u, v);
    return std::move(b).build();
}

/// Induced subgraph on a sorted keep-list; `keep` doubles as the map from
/// new labels back to old ones.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> relabel(g.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<int>(i);
    GraphBuilder b(static_cast<int>(keep.size()));
    for (const auto& [u, v] : g.edges())
        if (relabel[u] >= 0 && relabel[v] >= 0) b.add_edge(relabel[u], relabel[v]);
    return std::move(b).build();
}

inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int cnt = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        g.for_each_neighbor(u, [&](int v) {
            if (!seen[v]) {
                seen[v] = true;
                ++cnt;
                stack.push_back(v);
            }
        });
    }
    return cnt == n;
}

}  // namespace exg

#endif
