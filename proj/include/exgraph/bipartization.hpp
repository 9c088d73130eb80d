#ifndef EXGRAPH_BIPARTIZATION_HPP
#define EXGRAPH_BIPARTIZATION_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "exgraph/graph.hpp"

namespace exg {

inline constexpr int kMaxCutMaxVertices = 30;
inline constexpr int kOctMaxVertices = 24;
inline constexpr int kOctOracleMaxVertices = 14;
inline constexpr int kCutOracleMaxVertices = 24;

/// Optimal bipartization certificate: the removed vertex or edge set plus a
/// 2-coloring (in the labels of the input graph) proving the remainder is
/// bipartite.
struct BipartizationCertificate {
    enum class Kind { vertex, edge };
    Kind kind;
    std::vector<int> removed_vertices;
    std::vector<Edge> removed_edges;
    Bipartition witness;
};

inline bool check_bipartization_certificate(const Graph& g, const BipartizationCertificate& c) {
    if (c.kind == BipartizationCertificate::Kind::vertex) {
        Graph h = delete_vertices(g, c.removed_vertices);
        if (!is_bipartite(h).has_value()) return false;
        // witness uses original labels over the surviving vertices
        std::vector<signed char> side(g.vertex_count(), -1);
        for (int v : c.witness.X) side[v] = 0;
        for (int v : c.witness.Y) side[v] = 1;
        for (int v : c.removed_vertices)
            if (side[v] != -1) return false;
        int covered = static_cast<int>(c.witness.X.size() + c.witness.Y.size() + c.removed_vertices.size());
        if (covered != g.vertex_count()) return false;
        for (const auto& [u, v] : g.edges())
            if (side[u] != -1 && side[v] != -1 && side[u] == side[v]) return false;
        return true;
    }
    Graph h = delete_edges(g, c.removed_edges);
    if (!is_bipartite(h).has_value()) return false;
    if (!check_bipartition(h, c.witness)) return false;
    return true;
}

namespace detail {

inline std::vector<std::uint32_t> adjacency32(const Graph& g) {
    std::vector<std::uint32_t> adj(g.vertex_count(), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= std::uint32_t(1) << v;
        adj[v] |= std::uint32_t(1) << u;
    }
    return adj;
}

/// 2-colorability of the subgraph induced by `alive`; fills side bits.
inline bool bipartite_masked(const std::vector<std::uint32_t>& adj, std::uint32_t alive,
                             std::uint32_t* side0 = nullptr, std::uint32_t* side1 = nullptr) {
    const int n = static_cast<int>(adj.size());
    std::uint32_t seen = 0, s0 = 0, s1 = 0;
    for (int root = 0; root < n; ++root) {
        std::uint32_t rb = std::uint32_t(1) << root;
        if (!(alive & rb) || (seen & rb)) continue;
        std::vector<int> queue{root};
        seen |= rb;
        s0 |= rb;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            bool u0 = (s0 >> u) & 1;
            std::uint32_t nb = adj[u] & alive;
            if (nb & (u0 ? s0 : s1) & ~(std::uint32_t(1) << u)) return false;
            std::uint32_t fresh = nb & ~seen;
            seen |= fresh;
            (u0 ? s1 : s0) |= fresh;
            while (fresh) {
                queue.push_back(std::countr_zero(fresh));
                fresh &= fresh - 1;
            }
        }
    }
    // conflict scan: an edge inside one side
    for (int u = 0; u < n; ++u) {
        std::uint32_t ub = std::uint32_t(1) << u;
        if (!(alive & ub)) continue;
        std::uint32_t same = ((s0 & ub) ? s0 : s1) & adj[u] & alive;
        if (same) return false;
    }
    if (side0) *side0 = s0 & alive;
    if (side1) *side1 = s1 & alive;
    return true;
}

struct MaxCutSearch {
    int n = 0;
    std::vector<std::uint32_t> adj;
    std::vector<int> order;         // exploration order, degree descending
    std::vector<int> suffix_edges;  // edges fully inside order[d..]
    std::vector<int> l0, l1;        // assigned neighbors per side
    std::uint32_t side1_mask = 0, assigned = 0;
    int best = -1;
    std::uint32_t best_side1 = 0;

    void run(const Graph& g) {
        n = g.vertex_count();
        adj = adjacency32(g);
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> deg(n);
        for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
        suffix_edges.assign(n + 1, 0);
        for (int d = n - 1; d >= 0; --d) {
            std::uint32_t later = 0;
            for (int i = d + 1; i < n; ++i) later |= std::uint32_t(1) << order[i];
            suffix_edges[d] = suffix_edges[d + 1] + std::popcount(adj[order[d]] & later);
        }
        l0.assign(n, 0);
        l1.assign(n, 0);
        descend(0, 0);
    }

    void descend(int d, int cut) {
        if (d == n) {
            if (cut > best) {
                best = cut;
                best_side1 = side1_mask;
            }
            return;
        }
        int optimistic = cut + suffix_edges[d];
        for (int i = d; i < n; ++i) optimistic += std::max(l0[order[i]], l1[order[i]]);
        if (optimistic <= best) return;

        const int v = order[d];
        for (int s = 0; s < 2; ++s) {
            if (d == 0 && s == 1) break;  // fix the first vertex by symmetry
            int gain = s == 0 ? l1[v] : l0[v];
            assigned |= std::uint32_t(1) << v;
            if (s == 1) side1_mask |= std::uint32_t(1) << v;
            std::uint32_t nb = adj[v] & ~assigned;
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                ++(s == 0 ? l0 : l1)[u];
            }
            descend(d + 1, cut + gain);
            nb = adj[v] & ~assigned;
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                --(s == 0 ? l0 : l1)[u];
            }
            if (s == 1) side1_mask &= ~(std::uint32_t(1) << v);
            assigned &= ~(std::uint32_t(1) << v);
        }
    }
};

}  // namespace detail

/// Exact maximum cut via branch and bound (vertices in descending-degree
/// order, bound = cut + edges not yet decided). n <= 30.
inline std::pair<int, Bipartition> max_cut(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kMaxCutMaxVertices)
        throw UnsupportedSizeError("max_cut requires n <= " + std::to_string(kMaxCutMaxVertices));
    if (n == 0) return {0, Bipartition{}};
    detail::MaxCutSearch search;
    search.run(g);
    Bipartition b;
    for (int v = 0; v < n; ++v) ((search.best_side1 >> v) & 1 ? b.Y : b.X).push_back(v);
    return {search.best, b};
}

/// Minimum edge deletions to bipartite: e(G) - maxcut, removing the edges
/// inside the two optimal sides. n <= 30.
inline std::pair<int, BipartizationCertificate> gamma2(const Graph& g) {
    auto [cut, sides] = max_cut(g);
    BipartizationCertificate cert;
    cert.kind = BipartizationCertificate::Kind::edge;
    std::vector<signed char> side(g.vertex_count(), 0);
    for (int v : sides.Y) side[v] = 1;
    for (const auto& [u, v] : g.edges())
        if (side[u] == side[v]) cert.removed_edges.emplace_back(u, v);
    cert.witness = sides;
    return {g.edge_count() - cut, cert};
}

/// Independent gamma2 oracle: Gray-code sweep over all 2^(n-1) bipartitions
/// with vertex 0 pinned. n <= 24.
inline int gamma2_oracle(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kCutOracleMaxVertices)
        throw UnsupportedSizeError("gamma2_oracle requires n <= " + std::to_string(kCutOracleMaxVertices));
    if (n <= 1) return 0;
    auto adj = detail::adjacency32(g);
    std::uint32_t side1 = 0;
    int cross = 0, best = 0;
    const std::uint64_t sweeps = std::uint64_t(1) << (n - 1);
    for (std::uint64_t i = 1; i < sweeps; ++i) {
        int v = std::countr_zero(i) + 1;  // Gray code: flip one vertex per step
        std::uint32_t vb = std::uint32_t(1) << v;
        bool was1 = (side1 >> v) & 1;
        std::uint32_t same = was1 ? (adj[v] & side1 & ~vb) : (adj[v] & ~side1 & ~vb);
        int deg = std::popcount(adj[v]);
        int same_cnt = std::popcount(same);
        // crossing edges at v change from deg-same_cnt ... flipping swaps the roles
        cross += 2 * same_cnt - deg;
        side1 ^= vb;
        best = std::max(best, cross);
    }
    return g.edge_count() - best;
}

namespace detail {

/// Unit-vertex-capacity min cut between two terminal sets; terminals are
/// themselves deletable. Max-flow on the split digraph, aborting once the
/// flow exceeds `budget`.
inline std::optional<std::vector<int>> vertex_cut_within_budget(const std::vector<std::uint32_t>& adj,
                                                                std::uint32_t alive, std::uint32_t srcs,
                                                                std::uint32_t snks, int budget) {
    const int n = static_cast<int>(adj.size());
    // nodes: 2v = v_in, 2v+1 = v_out, 2n = source, 2n+1 = sink
    const int S = 2 * n, T = 2 * n + 1;
    std::vector<std::vector<int>> cap(2 * n + 2, std::vector<int>(2 * n + 2, 0));
    const int INF = 1 << 20;
    for (int v = 0; v < n; ++v) {
        if (!((alive >> v) & 1)) continue;
        cap[2 * v][2 * v + 1] = 1;
        std::uint32_t nb = adj[v] & alive;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            cap[2 * v + 1][2 * u] = INF;
        }
        if ((srcs >> v) & 1) cap[S][2 * v] = INF;
        if ((snks >> v) & 1) cap[2 * v + 1][T] = INF;
    }
    if (srcs & snks) return std::nullopt;  // same vertex on both sides: uncuttable
    int flow = 0;
    while (flow <= budget) {
        std::vector<int> par(2 * n + 2, -1);
        std::vector<int> queue{S};
        par[S] = S;
        for (std::size_t head = 0; head < queue.size() && par[T] == -1; ++head) {
            int u = queue[head];
            for (int w = 0; w < 2 * n + 2; ++w)
                if (par[w] == -1 && cap[u][w] > 0) {
                    par[w] = u;
                    queue.push_back(w);
                }
        }
        if (par[T] == -1) break;
        for (int w = T; w != S; w = par[w]) {
            cap[par[w]][w] -= 1;
            cap[w][par[w]] += 1;
        }
        ++flow;
    }
    if (flow > budget) return std::nullopt;
    // residual reachability picks the cut vertices
    std::vector<bool> reach(2 * n + 2, false);
    std::vector<int> queue{S};
    reach[S] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w = 0; w < 2 * n + 2; ++w)
            if (!reach[w] && cap[u][w] > 0) {
                reach[w] = true;
                queue.push_back(w);
            }
    }
    std::vector<int> cut;
    for (int v = 0; v < n; ++v)
        if (((alive >> v) & 1) && reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
    return cut;
}

/// One compression step of the odd cycle transversal solver: given a valid
/// transversal W of g, look for one of size |W|-1. Enumerates 3-partitions
/// of W (deleted / side X / side Y); the residue reduces to a vertex cut
/// between component-flip constraints against a reference 2-coloring.
inline std::optional<std::vector<int>> oct_compress(const Graph& g, const std::vector<int>& W) {
    const int n = g.vertex_count();
    auto adj = adjacency32(g);
    std::uint32_t wmask = 0;
    for (int v : W) wmask |= std::uint32_t(1) << v;
    const std::uint32_t rest = ~wmask & ((n == 32 ? 0 : (std::uint32_t(1) << n)) - (n == 32 ? 0 : 1));

    std::uint32_t phi0 = 0, phi1 = 0;
    if (!bipartite_masked(adj, rest, &phi0, &phi1)) return std::nullopt;  // W not a transversal

    const int k = static_cast<int>(W.size());
    const int target = k - 1;
    std::vector<int> digit(k, 0);  // 0 = deleted, 1 = side A, 2 = side B
    while (true) {
        std::uint32_t D = 0, A = 0, B = 0;
        for (int i = 0; i < k; ++i) {
            std::uint32_t b = std::uint32_t(1) << W[i];
            (digit[i] == 0 ? D : digit[i] == 1 ? A : B) |= b;
        }
        bool valid = std::popcount(D) <= target;
        for (int v = 0; valid && v < n; ++v) {
            std::uint32_t vb = std::uint32_t(1) << v;
            if ((A & vb) && (adj[v] & A)) valid = false;  // edge inside A
            if ((B & vb) && (adj[v] & B)) valid = false;
        }
        if (valid) {
            // forced colors for outside vertices; conflicts are forced deletions
            std::uint32_t forced_del = 0, want1 = 0, want0 = 0;
            std::uint32_t m = rest;
            while (m) {
                int v = std::countr_zero(m);
                m &= m - 1;
                bool toA = adj[v] & A, toB = adj[v] & B;
                if (toA && toB)
                    forced_del |= std::uint32_t(1) << v;
                else if (toA)
                    want1 |= std::uint32_t(1) << v;  // must take the side opposite A
                else if (toB)
                    want0 |= std::uint32_t(1) << v;
            }
            int base = std::popcount(D) + std::popcount(forced_del);
            if (base <= target) {
                std::uint32_t alive = rest & ~forced_del;
                // required component flip relative to the reference coloring
                std::uint32_t flip1 = (want1 & phi0) | (want0 & phi1);
                std::uint32_t flip0 = (want1 & phi1) | (want0 & phi0);
                flip1 &= alive;
                flip0 &= alive;
                auto cut = vertex_cut_within_budget(adj, alive, flip0, flip1, target - base);
                if (cut) {
                    std::vector<int> out;
                    std::uint32_t dm = D | forced_del;
                    while (dm) {
                        out.push_back(std::countr_zero(dm));
                        dm &= dm - 1;
                    }
                    out.insert(out.end(), cut->begin(), cut->end());
                    std::sort(out.begin(), out.end());
                    return out;
                }
            }
        }
        int i = 0;
        while (i < k && digit[i] == 2) digit[i++] = 0;
        if (i == k) break;
        ++digit[i];
    }
    return std::nullopt;
}

inline int d2_value(const Graph& g);

/// Iterative compression over vertex prefixes.
inline int d2_value_impl(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> T;
    std::vector<int> prefix;
    for (int i = 0; i < n; ++i) {
        prefix.push_back(i);
        Graph gi = induced_subgraph(g, prefix);
        std::vector<int> removed(T);
        if (is_bipartite(delete_vertices(gi, removed)).has_value()) continue;
        T.push_back(i);
        auto smaller = oct_compress(gi, T);
        if (smaller) T = *smaller;
    }
    return static_cast<int>(T.size());
}

inline int d2_value(const Graph& g) {
    if (is_bipartite(g).has_value()) return 0;
    return d2_value_impl(g);
}

}  // namespace detail

/// Minimum vertex deletions to bipartite (odd cycle transversal), exact via
/// iterative compression; the certificate is the lexicographically smallest
/// optimal transversal. n <= 24.
inline std::pair<int, BipartizationCertificate> d2(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kOctMaxVertices)
        throw UnsupportedSizeError("d2 requires n <= " + std::to_string(kOctMaxVertices));
    const int opt = detail::d2_value(g);

    BipartizationCertificate cert;
    cert.kind = BipartizationCertificate::Kind::vertex;
    std::vector<int> kept(n);
    std::iota(kept.begin(), kept.end(), 0);
    std::vector<int> removed;
    // Lexicographically smallest optimal transversal: one ascending pass,
    // taking v iff the remaining budget still completes without it.
    for (int v = 0; v < n && static_cast<int>(removed.size()) < opt; ++v) {
        std::vector<int> trial;
        for (int u : kept)
            if (u != v) trial.push_back(u);
        if (detail::d2_value(induced_subgraph(g, trial)) == opt - static_cast<int>(removed.size()) - 1) {
            removed.push_back(v);
            kept = std::move(trial);
        }
    }
    cert.removed_vertices = removed;
    auto sides = is_bipartite(induced_subgraph(g, kept));
    for (int idx : sides->X) cert.witness.X.push_back(kept[idx]);
    for (int idx : sides->Y) cert.witness.Y.push_back(kept[idx]);
    return {opt, cert};
}

/// Independent d2 oracle: vertex subsets by increasing size. n <= 14.
inline int d2_oracle(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kOctOracleMaxVertices)
        throw UnsupportedSizeError("d2_oracle requires n <= " + std::to_string(kOctOracleMaxVertices));
    if (is_bipartite(g).has_value()) return 0;
    auto adj = detail::adjacency32(g);
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    for (int k = 1; k < n; ++k) {
        // Gosper's hack over k-subsets
        std::uint32_t s = (std::uint32_t(1) << k) - 1;
        while (s <= full) {
            if (detail::bipartite_masked(adj, full & ~s)) return k;
            std::uint32_t c = s & -s, r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return n - 2;  // complete-graph fallback; unreachable for n >= 1
}

}  // namespace exg

#endif
