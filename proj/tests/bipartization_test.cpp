#include <gtest/gtest.h>

#include <random>

#include "exgraph/bipartization.hpp"
#include "exgraph/graph.hpp"
#include "test_graphs.hpp"

using namespace exg;
using namespace exg::testutil;

namespace {

Graph h_10_1() {
    // K_{4,4} plus a triangle hung off vertex 0 (the H(10,1) shape).
    std::vector<Edge> e;
    for (int u = 0; u < 4; ++u)
        for (int v = 4; v < 8; ++v) e.emplace_back(u, v);
    e.emplace_back(0, 8);
    e.emplace_back(0, 9);
    e.emplace_back(8, 9);
    return graph_from_edges(10, e);
}

}  // namespace

TEST(MaxCut, Basics) {
    EXPECT_EQ(max_cut(complete(4)).first, 4);
    EXPECT_EQ(max_cut(complete(5)).first, 6);
    EXPECT_EQ(max_cut(cycle(5)).first, 4);
    EXPECT_EQ(max_cut(Graph(0)).first, 0);
    EXPECT_THROW(max_cut(Graph(31)), UnsupportedSizeError);
}

TEST(MaxCut, CertificateMatchesCount) {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> dens(0.0, 1.0);
    for (int it = 0; it < 300; ++it) {
        Graph g = random_graph(1 + it % 9, dens(rng), rng);
        auto [cut, sides] = max_cut(g);
        std::vector<signed char> side(g.vertex_count(), 0);
        for (int v : sides.Y) side[v] = 1;
        int crossing = 0;
        for (const auto& [u, v] : g.edges()) crossing += side[u] != side[v];
        ASSERT_EQ(crossing, cut);
        ASSERT_EQ(sides.X.size() + sides.Y.size(), static_cast<std::size_t>(g.vertex_count()));
    }
}

TEST(Gamma2, Basics) {
    EXPECT_EQ(gamma2(complete(4)).first, 2);
    EXPECT_EQ(gamma2(complete(5)).first, 4);  // also f(4) via the split-clique identity
    EXPECT_EQ(gamma2(cycle(5)).first, 1);
}

TEST(Gamma2, CompleteGraphClosedForm) {
    for (int m = 1; m <= 12; ++m) {
        long long want = 1LL * m * (m - 1) / 2 - 1LL * m * m / 4;
        EXPECT_EQ(gamma2(complete(m)).first, want) << "m=" << m;
    }
}

TEST(Gamma2, OracleBasics) {
    EXPECT_EQ(gamma2_oracle(complete_bipartite(3, 3)), 0);
    EXPECT_EQ(gamma2_oracle(h_10_1()), 1);
    EXPECT_EQ(gamma2_oracle(cycle(7)), 1);
    EXPECT_THROW(gamma2_oracle(Graph(25)), UnsupportedSizeError);
}

TEST(D2, Basics) {
    EXPECT_EQ(d2(complete(4)).first, 2);
    EXPECT_EQ(d2(cycle(5)).first, 1);
    EXPECT_EQ(d2(petersen()).first, 3);
    EXPECT_EQ(d2(h_10_1()).first, 1);
    EXPECT_THROW(d2(Graph(25)), UnsupportedSizeError);
}

TEST(D2, PetersenBruteForceSubsets) {
    // Independent confirmation: no subset of size <= 2 bipartizes Petersen.
    Graph p = petersen();
    for (int a = 0; a < 10; ++a) {
        EXPECT_FALSE(is_bipartite(delete_vertices(p, {a})).has_value());
        for (int b = a + 1; b < 10; ++b)
            EXPECT_FALSE(is_bipartite(delete_vertices(p, {a, b})).has_value());
    }
    EXPECT_EQ(d2_oracle(p), 3);
}

TEST(D2, OracleBasics) {
    EXPECT_EQ(d2_oracle(complete(5)), 3);
    EXPECT_EQ(d2_oracle(complete_bipartite(4, 4)), 0);
    EXPECT_THROW(d2_oracle(Graph(15)), UnsupportedSizeError);
}

TEST(D2, LexSmallestCertificate) {
    // C5 needs one deletion and every vertex works, so the certificate must
    // name vertex 0.
    auto [size, cert] = d2(cycle(5));
    ASSERT_EQ(size, 1);
    ASSERT_EQ(cert.removed_vertices, std::vector<int>{0});
}

TEST(Bipartization, SolversMatchOraclesExhaustively) {
    // All graphs on 6 vertices via the 2^15 labeled sweep.
    for (int mask = 0; mask < (1 << 15); ++mask) {
        std::vector<Edge> e;
        int bit = 0;
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v, ++bit)
                if ((mask >> bit) & 1) e.emplace_back(u, v);
        Graph g = graph_from_edges(6, e);
        ASSERT_EQ(d2(g).first, d2_oracle(g)) << "mask=" << mask;
        ASSERT_EQ(gamma2(g).first, gamma2_oracle(g)) << "mask=" << mask;
    }
}

TEST(Bipartization, InvariantsOnRandomGraphs) {
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> dens(0.0, 1.0);
    for (int it = 0; it < 400; ++it) {
        Graph g = random_graph(1 + it % 10, dens(rng), rng);
        auto [dv, dcert] = d2(g);
        auto [ge, gcert] = gamma2(g);
        ASSERT_LE(dv, ge);  // delete one endpoint per removed edge
        ASSERT_EQ(dv == 0, ge == 0);
        ASSERT_EQ(dv == 0, is_bipartite(g).has_value());
        ASSERT_TRUE(check_bipartization_certificate(g, dcert));
        ASSERT_TRUE(check_bipartization_certificate(g, gcert));
        ASSERT_EQ(static_cast<int>(dcert.removed_vertices.size()), dv);
        ASSERT_EQ(static_cast<int>(gcert.removed_edges.size()), ge);
    }
}
