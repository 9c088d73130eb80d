#ifndef EXGRAPH_CONSTRUCTIONS_HPP
#define EXGRAPH_CONSTRUCTIONS_HPP

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "exgraph/graph.hpp"

namespace exg {

inline long long binom2(long long x) { return x * (x - 1) / 2; }

/// f(x) = C(x,2) - floor(x^2/4) + floor(x/2): the edge count of two cliques
/// splitting x+1 vertices as evenly as possible, and the gamma2 value of
/// K_{x+1}.
inline long long f_func(long long x) {
    if (x < 0) throw std::invalid_argument("f_func requires x >= 0");
    return binom2(x) - (x * x) / 4 + x / 2;
}

/// floor((n-t-1)^2/4) + C(t+2,2): the extremal edge count attained by
/// h_graph(n, t).
inline long long edge_bound(long long n, long long t) {
    if (t < 1 || n < t + 1) throw std::invalid_argument("edge_bound requires n >= t+1 >= 2");
    long long m = n - t - 1;
    return (m * m) / 4 + binom2(t + 2);
}

/// Complete r-partite graph with part sizes floor(n/r) or ceil(n/r); the
/// first n mod r parts take the larger size, labels are contiguous.
inline Graph turan(int n, int r) {
    if (r < 1) throw std::invalid_argument("turan requires r >= 1");
    if (n < 0) throw std::invalid_argument("turan requires n >= 0");
    std::vector<int> part_of(n);
    int label = 0;
    for (int p = 0; p < r; ++p) {
        int size = n / r + (p < n % r ? 1 : 0);
        for (int i = 0; i < size; ++i) part_of[label++] = p;
    }
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) b.add_edge(u, v);
    return std::move(b).build();
}

inline long long turan_edge_count(long long n, long long r) {
    long long total = binom2(n);
    for (long long p = 0; p < r; ++p) {
        long long size = n / r + (p < n % r ? 1 : 0);
        total -= binom2(size);
    }
    return total;
}

/// T_2(n-t-1) and K_{t+2} sharing one vertex. The shared vertex is vertex 0,
/// sitting in the larger Turan part; the t+1 private clique vertices take
/// the highest labels.
inline Graph h_graph(int n, int t) {
    if (t < 1 || n < t + 3)
        throw std::invalid_argument("h_graph requires t >= 1 and n >= t+3");
    const int m = n - t - 1;  // Turan block order
    GraphBuilder b(n);
    const int a = (m + 1) / 2;  // larger part: 0..a-1
    for (int u = 0; u < a; ++u)
        for (int v = a; v < m; ++v) b.add_edge(u, v);
    for (int u = m; u < n; ++u) {
        b.add_edge(0, u);
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    }
    return std::move(b).build();
}

/// T_2(n-1) with one edge subdivided: edge xy between the first vertices of
/// the two parts becomes the path x-z-y through the new top vertex z.
inline Graph h0(int n) {
    if (n < 4) throw std::invalid_argument("h0 requires n >= 4");
    const int m = n - 1;
    const int a = (m + 1) / 2;
    GraphBuilder b(n);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < m; ++v)
            if (!(u == 0 && v == a)) b.add_edge(u, v);
    b.add_edge(0, n - 1);
    b.add_edge(a, n - 1);
    return std::move(b).build();
}

/// Blowup of an odd cycle: part i is an independent set of sizes[i],
/// consecutive parts are completely joined.
inline Graph cycle_blowup(int L, const std::vector<int>& sizes) {
    if (L < 3 || L % 2 == 0) throw std::invalid_argument("cycle_blowup requires odd L >= 3");
    if (static_cast<int>(sizes.size()) != L)
        throw std::invalid_argument("cycle_blowup: need exactly L part sizes");
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("cycle_blowup: part sizes must be >= 1");
    std::vector<int> start(L + 1, 0);
    for (int i = 0; i < L; ++i) start[i + 1] = start[i] + sizes[i];
    GraphBuilder b(start[L]);
    for (int i = 0; i < L; ++i) {
        int j = (i + 1) % L;
        for (int u = start[i]; u < start[i + 1]; ++u)
            for (int v = start[j]; v < start[j + 1]; ++v) b.add_edge(u, v);
    }
    return std::move(b).build();
}

/// One block of a block graph: either the complete bipartite block K_{a,b}
/// or a clique K_size. Blocks after the first attach at an existing vertex
/// (their local vertex 0), so the block structure is always a tree.
struct BlockSpec {
    bool bipartite = false;
    int a = 0, b = 0;  // bipartite block
    int size = 0;      // clique block
    int attach = -1;   // vertex of the partial graph; -1 only for the first block
};

/// Member of the one-bipartite-block family: exactly one K_{a,b} block, all
/// other blocks cliques of size <= 2k.
inline Graph block_graph(const std::vector<BlockSpec>& blocks, int k) {
    if (k < 2) throw std::invalid_argument("block_graph requires k >= 2");
    int bip_count = 0;
    for (const auto& blk : blocks) bip_count += blk.bipartite;
    if (bip_count != 1)
        throw std::invalid_argument("block_graph requires exactly one complete bipartite block, got " +
                                    std::to_string(bip_count));
    std::vector<Edge> edges;
    int total = 0;
    bool first = true;
    for (const auto& blk : blocks) {
        int order;
        if (blk.bipartite) {
            if (blk.a < 1 || blk.b < 1) throw std::invalid_argument("block_graph: bipartite block needs a,b >= 1");
            order = blk.a + blk.b;
        } else {
            if (blk.size < 2) throw std::invalid_argument("block_graph: clique blocks need size >= 2");
            if (blk.size > 2 * k)
                throw std::invalid_argument("block_graph: clique of size " + std::to_string(blk.size) +
                                            " exceeds 2k = " + std::to_string(2 * k));
            order = blk.size;
        }
        std::vector<int> label(order);
        if (first) {
            if (blk.attach != -1) throw std::invalid_argument("block_graph: first block cannot attach");
            for (int i = 0; i < order; ++i) label[i] = total++;
            first = false;
        } else {
            if (blk.attach < 0 || blk.attach >= total)
                throw std::invalid_argument("block_graph: attachment vertex " + std::to_string(blk.attach) +
                                            " does not exist yet");
            label[0] = blk.attach;
            for (int i = 1; i < order; ++i) label[i] = total++;
        }
        if (blk.bipartite) {
            for (int u = 0; u < blk.a; ++u)
                for (int v = blk.a; v < order; ++v) edges.emplace_back(label[u], label[v]);
        } else {
            for (int u = 0; u < order; ++u)
                for (int v = u + 1; v < order; ++v) edges.emplace_back(label[u], label[v]);
        }
    }
    return graph_from_edges(total, edges);
}

/// Textual construction specs, the CLI surface for the generators:
///   turan:n=6,r=2
///   h:n=10,t=1
///   h0:n=9
///   blowup:L=7,sizes=2,2,2,2,2,2,2
///   blocks:bip=3x4;cliques=3,4@cut=0
struct ConstructionSpec {
    enum class Kind { turan, h, h0, blowup, blocks };
    Kind kind = Kind::turan;
    int n = 0, r = 0, t = 0, L = 0;
    std::vector<int> sizes;
    int bip_a = 0, bip_b = 0;
    std::vector<int> clique_sizes;
    int cut = 0;
};

namespace detail {

inline int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("construction spec: bad integer '" + s + "' for " + what);
    }
}

inline std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item, what));
    if (out.empty()) throw std::invalid_argument("construction spec: empty list for " + what);
    return out;
}

inline std::string expect_prefix(const std::string& s, const std::string& prefix, const std::string& what) {
    if (s.rfind(prefix, 0) != 0)
        throw std::invalid_argument("construction spec: expected '" + prefix + "...' in " + what + ", got '" + s + "'");
    return s.substr(prefix.size());
}

}  // namespace detail

inline ConstructionSpec parse_construction(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("construction spec: missing ':' in '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    ConstructionSpec spec;
    if (kind == "turan") {
        spec.kind = ConstructionSpec::Kind::turan;
        auto comma = rest.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("construction spec: turan needs n=..,r=..");
        spec.n = detail::parse_int(detail::expect_prefix(rest.substr(0, comma), "n=", "turan"), "n");
        spec.r = detail::parse_int(detail::expect_prefix(rest.substr(comma + 1), "r=", "turan"), "r");
    } else if (kind == "h") {
        spec.kind = ConstructionSpec::Kind::h;
        auto comma = rest.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("construction spec: h needs n=..,t=..");
        spec.n = detail::parse_int(detail::expect_prefix(rest.substr(0, comma), "n=", "h"), "n");
        spec.t = detail::parse_int(detail::expect_prefix(rest.substr(comma + 1), "t=", "h"), "t");
    } else if (kind == "h0") {
        spec.kind = ConstructionSpec::Kind::h0;
        spec.n = detail::parse_int(detail::expect_prefix(rest, "n=", "h0"), "n");
    } else if (kind == "blowup") {
        spec.kind = ConstructionSpec::Kind::blowup;
        auto comma = rest.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("construction spec: blowup needs L=..,sizes=..");
        spec.L = detail::parse_int(detail::expect_prefix(rest.substr(0, comma), "L=", "blowup"), "L");
        spec.sizes = detail::parse_int_list(detail::expect_prefix(rest.substr(comma + 1), "sizes=", "blowup"), "sizes");
    } else if (kind == "blocks") {
        spec.kind = ConstructionSpec::Kind::blocks;
        std::string bip = rest, cliques;
        auto semi = rest.find(';');
        if (semi != std::string::npos) {
            bip = rest.substr(0, semi);
            cliques = rest.substr(semi + 1);
        }
        bip = detail::expect_prefix(bip, "bip=", "blocks");
        auto x = bip.find('x');
        if (x == std::string::npos) throw std::invalid_argument("construction spec: blocks bip needs AxB");
        spec.bip_a = detail::parse_int(bip.substr(0, x), "bip a");
        spec.bip_b = detail::parse_int(bip.substr(x + 1), "bip b");
        if (!cliques.empty()) {
            cliques = detail::expect_prefix(cliques, "cliques=", "blocks");
            auto at = cliques.find("@cut=");
            if (at != std::string::npos) {
                spec.cut = detail::parse_int(cliques.substr(at + 5), "cut");
                cliques = cliques.substr(0, at);
            }
            spec.clique_sizes = detail::parse_int_list(cliques, "cliques");
        }
    } else {
        throw std::invalid_argument("construction spec: unknown kind '" + kind + "'");
    }
    return spec;
}

inline std::string construction_to_string(const ConstructionSpec& s) {
    std::ostringstream out;
    switch (s.kind) {
        case ConstructionSpec::Kind::turan:
            out << "turan:n=" << s.n << ",r=" << s.r;
            break;
        case ConstructionSpec::Kind::h:
            out << "h:n=" << s.n << ",t=" << s.t;
            break;
        case ConstructionSpec::Kind::h0:
            out << "h0:n=" << s.n;
            break;
        case ConstructionSpec::Kind::blowup:
            out << "blowup:L=" << s.L << ",sizes=";
            for (std::size_t i = 0; i < s.sizes.size(); ++i) out << (i ? "," : "") << s.sizes[i];
            break;
        case ConstructionSpec::Kind::blocks:
            out << "blocks:bip=" << s.bip_a << "x" << s.bip_b;
            if (!s.clique_sizes.empty()) {
                out << ";cliques=";
                for (std::size_t i = 0; i < s.clique_sizes.size(); ++i) out << (i ? "," : "") << s.clique_sizes[i];
                out << "@cut=" << s.cut;
            }
            break;
    }
    return out.str();
}

/// Instantiate a parsed spec. `k` bounds the clique blocks of the blocks
/// variant and is ignored by the others.
inline Graph build_construction(const ConstructionSpec& s, int k = 2) {
    switch (s.kind) {
        case ConstructionSpec::Kind::turan:
            return turan(s.n, s.r);
        case ConstructionSpec::Kind::h:
            return h_graph(s.n, s.t);
        case ConstructionSpec::Kind::h0:
            return h0(s.n);
        case ConstructionSpec::Kind::blowup:
            return cycle_blowup(s.L, s.sizes);
        case ConstructionSpec::Kind::blocks: {
            std::vector<BlockSpec> blocks;
            BlockSpec bip;
            bip.bipartite = true;
            bip.a = s.bip_a;
            bip.b = s.bip_b;
            blocks.push_back(bip);
            for (int size : s.clique_sizes) {
                BlockSpec c;
                c.size = size;
                c.attach = s.cut;
                blocks.push_back(c);
            }
            return block_graph(blocks, k);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace exg

#endif
