#ifndef EXGRAPH_CANONICAL_HPP
#define EXGRAPH_CANONICAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "exgraph/graph.hpp"
#include "exgraph/graph6.hpp"

namespace exg {

/// Canonical byte string: equal iff the graphs are isomorphic. Exact (search
/// based), supported for n <= 12.
struct CanonicalForm {
    std::string bytes;
    bool operator==(const CanonicalForm& o) const { return bytes == o.bytes; }
    bool operator<(const CanonicalForm& o) const { return bytes < o.bytes; }
};

inline constexpr int kCanonicalFormMaxVertices = 12;

namespace detail {

/// Iterated neighborhood-color refinement. Returns a vertex coloring whose
/// class ids and class order are isomorphism-invariant (initial classes by
/// descending degree).
inline std::vector<int> refine_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<int> distinct(deg);
    std::sort(distinct.begin(), distinct.end(), std::greater<int>());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v)
        color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), deg[v], std::greater<int>()) -
                                    distinct.begin());

    int classes = static_cast<int>(distinct.size());
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            g.for_each_neighbor(v, [&](int u) { sig[v].push_back(color[u]); });
            std::sort(sig[v].begin() + 1, sig[v].end());
        }
        std::vector<std::vector<int>> uniq(sig);
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        if (static_cast<int>(uniq.size()) == classes) return color;
        classes = static_cast<int>(uniq.size());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    }
}

struct CanonSearch {
    int n;
    std::vector<std::uint16_t> row;        // adjacency masks, n <= 12
    std::vector<int> class_of_position;    // positions filled class by class
    std::vector<int> color;
    std::vector<int> perm;                 // position -> vertex, current path
    std::vector<std::uint16_t> cols;       // column bits along current path
    std::vector<int> best_perm;
    std::vector<std::uint16_t> best_cols;
    bool have_best = false;
    std::uint16_t placed = 0;

    // Returns true if best was updated somewhere in the subtree.
    bool descend(int p, bool equal) {
        if (p == n) {
            if (!have_best || !equal) {
                best_cols = cols;
                best_perm = perm;
                have_best = true;
                return true;
            }
            return false;
        }
        // Column bits of candidate v against the placed prefix; earlier
        // positions are more significant so prefix comparisons match the
        // final byte string.
        std::uint16_t mincol = 0xffff;
        std::uint16_t candcol[12];
        int cand[12];
        int ncand = 0;
        for (int v = 0; v < n; ++v) {
            if (color[v] != class_of_position[p] || ((placed >> v) & 1)) continue;
            std::uint16_t c = 0;
            for (int i = 0; i < p; ++i) c = static_cast<std::uint16_t>((c << 1) | ((row[v] >> perm[i]) & 1));
            cand[ncand] = v;
            candcol[ncand] = c;
            ++ncand;
            mincol = std::min(mincol, c);
        }
        if (have_best && equal && mincol > best_cols[p]) return false;
        bool child_equal = have_best && equal && mincol == best_cols[p];
        bool updated = false;
        for (int i = 0; i < ncand; ++i) {
            if (candcol[i] != mincol) continue;
            int v = cand[i];
            bool twin = false;
            for (int j = 0; j < i && !twin; ++j) {
                if (candcol[j] != mincol) continue;
                int u = cand[j];
                std::uint16_t diff = static_cast<std::uint16_t>(row[u] ^ row[v]);
                diff &= static_cast<std::uint16_t>(~((1u << u) | (1u << v)));
                if (diff == 0) twin = true;
            }
            if (twin) continue;
            perm[p] = v;
            cols[p] = mincol;
            placed |= std::uint16_t(1u << v);
            if (descend(p + 1, child_equal)) {
                updated = true;
                child_equal = true;  // best now extends the current prefix
            }
            placed &= static_cast<std::uint16_t>(~(1u << v));
        }
        return updated;
    }
};

}  // namespace detail

/// Canonical relabeling: position i of the result holds vertex perm[i].
inline std::vector<int> canonical_permutation(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kCanonicalFormMaxVertices)
        throw UnsupportedSizeError("canonical_form supports at most " +
                                   std::to_string(kCanonicalFormMaxVertices) + " vertices, got " + std::to_string(n));
    if (n == 0) return {};
    detail::CanonSearch s;
    s.n = n;
    s.row.resize(n);
    for (int v = 0; v < n; ++v) {
        std::uint16_t m = 0;
        g.for_each_neighbor(v, [&](int u) { m |= std::uint16_t(1u << u); });
        s.row[v] = m;
    }
    s.color = detail::refine_colors(g);
    s.class_of_position.resize(n);
    {
        std::vector<int> class_size(n, 0);
        for (int v = 0; v < n; ++v) ++class_size[s.color[v]];
        int p = 0;
        for (int c = 0; c < n; ++c)
            for (int k = 0; k < class_size[c]; ++k) s.class_of_position[p++] = c;
    }
    s.perm.assign(n, -1);
    s.cols.assign(n, 0);
    s.descend(0, false);
    return s.best_perm;
}

inline Graph apply_permutation(const Graph& g, const std::vector<int>& position_to_vertex) {
    const int n = g.vertex_count();
    std::vector<int> pos_of(n);
    for (int p = 0; p < n; ++p) pos_of[position_to_vertex[p]] = p;
    GraphBuilder b(n);
    for (const auto& [u, v] : g.edges()) b.add_edge(pos_of[u], pos_of[v]);
    return std::move(b).build();
}

inline CanonicalForm canonical_form(const Graph& g) {
    return CanonicalForm{graph6_encode(apply_permutation(g, canonical_permutation(g)))};
}

/// Upper-triangle bits of the canonical labeling packed into a uint64,
/// most significant bit first, so numeric order equals graph6 order.
/// Valid for n <= 11 (55 bits).
inline std::uint64_t canonical_key64(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 11) throw UnsupportedSizeError("canonical_key64 requires n <= 11");
    auto perm = canonical_permutation(g);
    std::vector<int> pos_of(n);
    for (int p = 0; p < n; ++p) pos_of[perm[p]] = p;
    const int nbits = n * (n - 1) / 2;
    std::uint64_t key = 0;
    int idx = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++idx)
            if (g.has_edge(perm[row], perm[col])) key |= std::uint64_t(1) << (nbits - 1 - idx);
    return key;
}

/// Rebuilds the graph a canonical_key64 stands for.
inline Graph graph_from_key64(int n, std::uint64_t key) {
    const int nbits = n * (n - 1) / 2;
    GraphBuilder b(n);
    int idx = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++idx)
            if ((key >> (nbits - 1 - idx)) & 1) b.add_edge(row, col);
    return std::move(b).build();
}

}  // namespace exg

#endif
