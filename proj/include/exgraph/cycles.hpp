#ifndef EXGRAPH_CYCLES_HPP
#define EXGRAPH_CYCLES_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "exgraph/graph.hpp"

namespace exg {

/// A simple cycle v0 v1 ... v_{L-1} v0 in some host graph.
struct CycleCertificate {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
};

inline bool check_cycle(const Graph& g, const CycleCertificate& c) {
    const int L = c.length();
    if (L < 3) return false;
    std::vector<bool> seen(g.vertex_count(), false);
    for (int v : c.vertices) {
        if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
        seen[v] = true;
    }
    for (int i = 0; i < L; ++i)
        if (!g.has_edge(c.vertices[i], c.vertices[(i + 1) % L])) return false;
    return true;
}

namespace detail {

/// Rotate/reflect so the cycle starts at its smallest vertex and its second
/// vertex is the smaller neighbor; makes certificates reproducible.
inline void normalize_cycle(CycleCertificate& c) {
    const int L = c.length();
    int at = static_cast<int>(std::min_element(c.vertices.begin(), c.vertices.end()) - c.vertices.begin());
    std::vector<int> out(L);
    for (int i = 0; i < L; ++i) out[i] = c.vertices[(at + i) % L];
    if (out[1] > out[L - 1]) std::reverse(out.begin() + 1, out.end());
    c.vertices = std::move(out);
}

}  // namespace detail

/// Exact girth: per-vertex BFS, candidates from non-tree edges.
inline std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), par(n), queue;
    for (int s = 0; s < n && best > 3; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(par.begin(), par.end(), -1);
        dist[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            g.for_each_neighbor(u, [&](int v) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    par[v] = u;
                    queue.push_back(v);
                }
            });
        }
        for (const auto& [u, v] : g.edges()) {
            if (dist[u] == -1 || dist[v] == -1) continue;
            if (par[u] == v || par[v] == u) continue;
            best = std::min(best, dist[u] + dist[v] + 1);
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

/// Exact odd girth with witness, via shortest closed odd walks on the
/// bipartite double cover; the walk is shortcut to a simple cycle of the
/// same length. Absent iff bipartite.
inline std::optional<std::pair<int, CycleCertificate>> odd_girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> best_walk;
    std::vector<int> dist(2 * n), par(2 * n), queue;
    for (int s = 0; s < n && best > 3; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[2 * s] = 0;
        par[2 * s] = -1;
        queue.assign(1, 2 * s);
        const int target = 2 * s + 1;
        for (std::size_t head = 0; head < queue.size() && dist[target] == -1; ++head) {
            int cur = queue[head];
            int u = cur / 2, p = cur % 2;
            g.for_each_neighbor(u, [&](int v) {
                int nxt = 2 * v + (1 - p);
                if (dist[nxt] == -1) {
                    dist[nxt] = dist[cur] + 1;
                    par[nxt] = cur;
                    queue.push_back(nxt);
                }
            });
        }
        if (dist[target] != -1 && dist[target] < best) {
            best = dist[target];
            best_walk.clear();
            for (int cur = target; cur != -1; cur = par[cur]) best_walk.push_back(cur / 2);
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;

    // best_walk is a closed odd walk (first == last); splice out repeats,
    // keeping the odd part, until the cycle is simple.
    std::vector<int> walk(best_walk.begin(), best_walk.end() - 1);  // cyclic sequence
    while (true) {
        std::unordered_map<int, int> first_at;
        int i = -1, j = -1;
        for (int k = 0; k < static_cast<int>(walk.size()); ++k) {
            auto it = first_at.find(walk[k]);
            if (it != first_at.end()) {
                i = it->second;
                j = k;
                break;
            }
            first_at.emplace(walk[k], k);
        }
        if (i < 0) break;
        std::vector<int> inner(walk.begin() + i, walk.begin() + j);
        std::vector<int> outer(walk.begin() + j, walk.end());
        outer.insert(outer.end(), walk.begin(), walk.begin() + i);
        walk = (inner.size() % 2 == 1) ? std::move(inner) : std::move(outer);
    }
    CycleCertificate cert{std::move(walk)};
    detail::normalize_cycle(cert);
    return std::make_pair(best, cert);
}

inline constexpr int kCycleSpectrumMaxVertices = 20;
inline constexpr int kWeaklyPancyclicMaxVertices = 16;

/// Bit L set iff g has a simple cycle with exactly L vertices. Exact subset
/// DP anchored at each cycle's smallest vertex; n <= 20.
inline std::uint32_t cycle_length_spectrum(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kCycleSpectrumMaxVertices)
        throw UnsupportedSizeError("cycle_length_spectrum requires n <= " +
                                   std::to_string(kCycleSpectrumMaxVertices));
    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    std::uint32_t lengths = 0;
    if (n == 0) return lengths;
    std::vector<std::uint32_t> dp(std::size_t(1) << n, 0);
    for (int v = 0; v < n; ++v) dp[std::size_t(1) << v] = 1u << v;
    for (std::uint32_t S = 1; S < (std::uint32_t(1) << n); ++S) {
        std::uint32_t ends = dp[S];
        if (!ends) continue;
        const int anchor = std::countr_zero(S);
        const int size = std::popcount(S);
        const std::uint32_t above = ~((std::uint32_t(2) << anchor) - 1);
        while (ends) {
            const int v = std::countr_zero(ends);
            ends &= ends - 1;
            if (size >= 3 && ((adj[v] >> anchor) & 1)) lengths |= 1u << size;
            std::uint32_t ext = adj[v] & ~S & above;
            while (ext) {
                const int u = std::countr_zero(ext);
                ext &= ext - 1;
                dp[S | (1u << u)] |= 1u << u;
            }
        }
    }
    return lengths;
}

/// Exact circumference (longest cycle length); absent for forests; n <= 20.
inline std::optional<int> circumference(const Graph& g) {
    std::uint32_t lengths = cycle_length_spectrum(g);
    if (!lengths) return std::nullopt;
    return 31 - std::countl_zero(lengths);
}

/// Edge count of a longest path; exact subset DP; n <= 20.
inline int longest_path_length(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kCycleSpectrumMaxVertices)
        throw UnsupportedSizeError("longest_path_length requires n <= " +
                                   std::to_string(kCycleSpectrumMaxVertices));
    if (n == 0) return 0;
    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    std::vector<std::uint32_t> dp(std::size_t(1) << n, 0);
    for (int v = 0; v < n; ++v) dp[std::size_t(1) << v] = 1u << v;
    int best = 0;
    for (std::uint32_t S = 1; S < (std::uint32_t(1) << n); ++S) {
        std::uint32_t ends = dp[S];
        if (!ends) continue;
        best = std::max(best, std::popcount(S) - 1);
        while (ends) {
            const int v = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t ext = adj[v] & ~S;
            while (ext) {
                const int u = std::countr_zero(ext);
                ext &= ext - 1;
                dp[S | (1u << u)] |= 1u << u;
            }
        }
    }
    return best;
}

/// True iff cycles of every length from girth to circumference exist;
/// vacuously true for forests. n <= 16.
inline bool is_weakly_pancyclic(const Graph& g) {
    if (g.vertex_count() > kWeaklyPancyclicMaxVertices)
        throw UnsupportedSizeError("is_weakly_pancyclic requires n <= " +
                                   std::to_string(kWeaklyPancyclicMaxVertices));
    std::uint32_t lengths = cycle_length_spectrum(g);
    if (!lengths) return true;
    const int lo = std::countr_zero(lengths);
    const int hi = 31 - std::countl_zero(lengths);
    for (int L = lo; L <= hi; ++L)
        if (!((lengths >> L) & 1)) return false;
    return true;
}

namespace detail {

/// Biconnected components as vertex lists (only components that contain at
/// least one edge). Iterative Tarjan with an edge stack.
inline std::vector<std::vector<int>> biconnected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> estack;
    std::vector<std::vector<int>> comps;
    int timer = 0;

    struct Frame {
        int v, parent;
        std::vector<int> nbrs;
        std::size_t idx;
    };

    auto pop_component = [&](int u, int v) {
        std::vector<int> verts;
        std::vector<bool> in;
        while (!estack.empty()) {
            Edge e = estack.back();
            estack.pop_back();
            for (int x : {e.first, e.second}) {
                if (x >= static_cast<int>(in.size())) in.resize(x + 1, false);
                if (!in[x]) {
                    in[x] = true;
                    verts.push_back(x);
                }
            }
            if ((e.first == u && e.second == v) || (e.first == v && e.second == u)) break;
        }
        std::sort(verts.begin(), verts.end());
        comps.push_back(std::move(verts));
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack;
        stack.push_back({root, -1, g.neighbors(root), 0});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.idx < f.nbrs.size()) {
                int w = f.nbrs[f.idx++];
                if (disc[w] == -1) {
                    estack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, g.neighbors(w), 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    estack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, parent = f.parent;
                stack.pop_back();
                if (parent != -1) {
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] >= disc[parent]) pop_component(parent, v);
                }
            }
        }
    }
    return comps;
}

/// Walk distances to `target` by parity within `h` restricted to vertices
/// >= minv: dist[2u+p] = shortest u->target walk of parity p, or -1.
inline std::vector<int> parity_distances(const Graph& h, int target, int minv) {
    const int n = h.vertex_count();
    std::vector<int> dist(2 * n, -1);
    std::vector<int> queue;
    dist[2 * target] = 0;
    queue.push_back(2 * target);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int cur = queue[head];
        int u = cur / 2, p = cur % 2;
        h.for_each_neighbor(u, [&](int v) {
            if (v < minv) return;
            int nxt = 2 * v + (1 - p);
            if (dist[nxt] == -1) {
                dist[nxt] = dist[cur] + 1;
                queue.push_back(nxt);
            }
        });
    }
    return dist;
}

/// Depth-first search for a simple cycle of exactly L vertices through
/// anchor s (= minimum vertex of the cycle) inside h.
inline bool anchored_cycle_dfs(const Graph& h, int L, int s, std::vector<int>& path) {
    const std::vector<int> dist = parity_distances(h, s, s);
    path.assign(1, s);
    std::vector<bool> visited(h.vertex_count(), false);
    visited[s] = true;
    // Iterative DFS; frames hold the next neighbor index to try.
    std::vector<std::vector<int>> options(L + 1);
    std::vector<std::size_t> cursor(L + 1, 0);

    auto children_of = [&](int v, int k) {
        std::vector<int> out;
        const int remaining = L - k;  // edges still needed after stepping
        h.for_each_neighbor(v, [&](int u) {
            if (u <= s || visited[u]) return;
            int d = dist[2 * u + (remaining & 1)];
            if (d == -1 || d > remaining) return;
            out.push_back(u);
        });
        return out;
    };

    options[1] = children_of(s, 1);
    cursor[1] = 0;
    int depth = 1;  // number of vertices currently on the path
    while (depth >= 1) {
        if (depth == L) {
            if (h.has_edge(path.back(), s)) return true;
            visited[path.back()] = false;
            path.pop_back();
            --depth;
            continue;
        }
        if (cursor[depth] >= options[depth].size()) {
            if (depth > 1) {
                visited[path.back()] = false;
                path.pop_back();
            }
            --depth;
            continue;
        }
        int u = options[depth][cursor[depth]++];
        path.push_back(u);
        visited[u] = true;
        ++depth;
        options[depth] = children_of(u, depth);
        cursor[depth] = 0;
    }
    return false;
}

}  // namespace detail

/// A simple cycle with exactly L vertices, or absent. Exact backtracking:
/// cycles live inside one biconnected component, are anchored at their
/// smallest vertex, and children are pruned by parity-aware walk distances.
inline std::optional<CycleCertificate> has_cycle_of_length(const Graph& g, int L) {
    if (L < 3) throw std::invalid_argument("has_cycle_of_length requires L >= 3");
    if (L > g.vertex_count()) return std::nullopt;
    for (const auto& comp : detail::biconnected_components(g)) {
        if (static_cast<int>(comp.size()) < L) continue;
        Graph h = induced_subgraph(g, comp);
        if (L % 2 == 1 && is_bipartite(h).has_value()) continue;
        std::vector<int> path;
        for (int s = 0; s + L <= h.vertex_count(); ++s) {
            if (detail::anchored_cycle_dfs(h, L, s, path)) {
                CycleCertificate cert;
                cert.vertices.reserve(L);
                for (int v : path) cert.vertices.push_back(comp[v]);
                detail::normalize_cycle(cert);
                return cert;
            }
        }
    }
    return std::nullopt;
}

/// Existence of a simple cycle of exactly L vertices through `v`. Used by
/// the enumerator: a parent known to be C_L-free only needs its new vertex
/// checked.
inline bool exists_cycle_through(const Graph& g, int L, int v) {
    if (L < 3 || L > g.vertex_count()) return false;
    const std::vector<int> dist = detail::parity_distances(g, v, 0);
    std::vector<bool> visited(g.vertex_count(), false);
    visited[v] = true;

    // Recursive lambda is fine: depth <= L <= n, and this is only used at
    // enumeration sizes.
    auto rec = [&](auto&& self, int last, int k) -> bool {
        if (k == L) return g.has_edge(last, v);
        bool found = false;
        g.for_each_neighbor(last, [&](int u) {
            if (found || visited[u]) return;
            const int remaining = L - k;
            int d = dist[2 * u + (remaining & 1)];
            if (d == -1 || d > remaining) return;
            visited[u] = true;
            if (self(self, u, k + 1)) found = true;
            if (!found) visited[u] = false;
        });
        return found;
    };
    return rec(rec, v, 1);
}

/// |N(v) ∩ V(C)| for v off the cycle.
inline int neighbors_on_cycle(const Graph& g, const CycleCertificate& c, int v) {
    if (!check_cycle(g, c)) throw std::invalid_argument("neighbors_on_cycle: invalid cycle certificate");
    for (int u : c.vertices)
        if (u == v) throw std::invalid_argument("neighbors_on_cycle: vertex lies on the cycle");
    int cnt = 0;
    for (int u : c.vertices)
        if (g.has_edge(u, v)) ++cnt;
    return cnt;
}

}  // namespace exg

#endif
