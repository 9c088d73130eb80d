#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "exgraph/canonical.hpp"
#include "exgraph/graph.hpp"
#include "exgraph/graph6.hpp"
#include "test_graphs.hpp"

using namespace exg;
using namespace exg::testutil;

TEST(GraphFromEdges, Triangle) {
    Graph g = graph_from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.edge_count(), 3);
    EXPECT_TRUE(g.has_edge(2, 0));
}

TEST(GraphFromEdges, EmptyGraph) {
    Graph g = graph_from_edges(4, {});
    EXPECT_EQ(g.vertex_count(), 4);
    EXPECT_EQ(g.edge_count(), 0);
}

TEST(GraphFromEdges, RejectsSelfLoop) {
    EXPECT_THROW(graph_from_edges(2, {{0, 0}}), std::invalid_argument);
}

TEST(GraphFromEdges, RejectsOutOfRange) {
    EXPECT_THROW(graph_from_edges(2, {{0, 2}}), std::invalid_argument);
    EXPECT_THROW(graph_from_edges(2, {{-1, 0}}), std::invalid_argument);
}

TEST(GraphFromEdges, CollapsesDuplicates) {
    Graph g = graph_from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
    EXPECT_EQ(g.edge_count(), 1);
}

TEST(Graph6, EncodesK4) { EXPECT_EQ(graph6_encode(complete(4)), "C~"); }

TEST(Graph6, EncodesNullGraph) { EXPECT_EQ(graph6_encode(Graph(0)), "?"); }

TEST(Graph6, DecodeToleratesHeaderAndNewline) {
    Graph g = graph6_decode(">>graph6<<C~\n");
    EXPECT_EQ(g.vertex_count(), 4);
    EXPECT_EQ(g.edge_count(), 6);
}

TEST(Graph6, RejectsMalformedInput) {
    EXPECT_THROW(graph6_decode(""), Graph6Error);
    EXPECT_THROW(graph6_decode("C~~"), Graph6Error);      // extra data byte
    EXPECT_THROW(graph6_decode("C"), Graph6Error);        // missing data byte
    EXPECT_THROW(graph6_decode("B\x7f"), Graph6Error);    // byte above 126
    EXPECT_THROW(graph6_decode(std::string(1, ' ')), Graph6Error);  // byte below 63
}

TEST(Graph6, RejectsNonzeroPadding) {
    // n=3 needs 3 bits; low padding bits must stay zero.
    std::string enc = graph6_encode(complete(3));
    ASSERT_EQ(enc.size(), 2u);
    enc[1] = static_cast<char>(enc[1] + 1);  // flips the lowest padding bit
    EXPECT_THROW(graph6_decode(enc), Graph6Error);
}

TEST(Graph6, RoundTripsRandomGraphs) {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> size(0, 62);
    std::uniform_real_distribution<double> dens(0.0, 1.0);
    for (int it = 0; it < 10000; ++it) {
        Graph g = random_graph(size(rng), dens(rng), rng);
        Graph h = graph6_decode(graph6_encode(g));
        ASSERT_TRUE(g == h) << "round-trip mismatch at iteration " << it;
    }
}

TEST(Graph6, RoundTripsLongForm) {
    Graph g = complete_bipartite(40, 30);  // n=70 needs the '~' prefix
    std::string enc = graph6_encode(g);
    ASSERT_EQ(enc[0], '~');
    Graph h = graph6_decode(enc);
    EXPECT_TRUE(g == h);
}

TEST(IsBipartite, CompleteBipartiteSides) {
    auto b = is_bipartite(complete_bipartite(3, 3));
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(b->X.size(), 3u);
    EXPECT_EQ(b->Y.size(), 3u);
    EXPECT_TRUE(check_bipartition(complete_bipartite(3, 3), *b));
}

TEST(IsBipartite, OddCycleFails) { EXPECT_FALSE(is_bipartite(cycle(5)).has_value()); }

TEST(IsBipartite, NullGraph) {
    auto b = is_bipartite(Graph(0));
    ASSERT_TRUE(b.has_value());
    EXPECT_TRUE(b->X.empty());
    EXPECT_TRUE(b->Y.empty());
}

TEST(DeleteOps, VertexDeletionCompacts) {
    Graph g = delete_vertices(complete(4), {1});
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.edge_count(), 3);  // K3
}

TEST(DeleteOps, EdgeDeletionKeepsLabels) {
    Graph g = delete_edges(cycle(5), {{0, 4}});
    EXPECT_EQ(g.vertex_count(), 5);
    EXPECT_EQ(g.edge_count(), 4);
    EXPECT_TRUE(is_bipartite(g).has_value());  // P5
}

TEST(DeleteOps, EmptyDeletionIsIdentity) {
    Graph g = petersen();
    EXPECT_TRUE(delete_vertices(g, {}) == g);
    EXPECT_TRUE(delete_edges(g, {}) == g);
}

TEST(DeleteOps, RejectsBadMembers) {
    EXPECT_THROW(delete_vertices(complete(3), {3}), std::invalid_argument);
    EXPECT_THROW(delete_edges(complete_bipartite(2, 2), {{0, 1}}), std::invalid_argument);
}

TEST(Canonical, C4EqualsK22) {
    EXPECT_EQ(canonical_form(cycle(4)).bytes, canonical_form(complete_bipartite(2, 2)).bytes);
}

TEST(Canonical, DistinguishesSameOrderGraphs) {
    Graph k3_plus_isolated = graph_from_edges(4, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_NE(canonical_form(k3_plus_isolated).bytes, canonical_form(path(4)).bytes);
}

TEST(Canonical, RejectsOversize) {
    EXPECT_THROW(canonical_form(Graph(13)), UnsupportedSizeError);
}

namespace {

// Independent oracle: minimum graph6 string over all vertex permutations.
std::string min_g6_over_permutations(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string enc = graph6_encode(apply_permutation(g, perm));
        if (best.empty() || enc < best) best = enc;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

TEST(Canonical, ElevenClassesOnFourVertices) {
    std::set<std::string> forms;
    std::set<std::string> oracle_forms;
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<Edge> e;
        int bit = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v, ++bit)
                if ((mask >> bit) & 1) e.emplace_back(u, v);
        Graph g = graph_from_edges(4, e);
        forms.insert(canonical_form(g).bytes);
        oracle_forms.insert(min_g6_over_permutations(g));
    }
    EXPECT_EQ(forms.size(), 11u);
    EXPECT_EQ(oracle_forms.size(), 11u);
}

TEST(Canonical, InvariantUnderRelabeling) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> size(1, 8);
    std::uniform_real_distribution<double> dens(0.0, 1.0);
    for (int it = 0; it < 300; ++it) {
        int n = size(rng);
        Graph g = random_graph(n, dens(rng), rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        ASSERT_EQ(canonical_form(g).bytes, canonical_form(apply_permutation(g, perm)).bytes);
    }
}

TEST(Canonical, PartitionsLikePermutationOracle) {
    // The oracle minimizes over all n! relabelings, canonical_form over a
    // refinement-constrained subset; the induced partitions must agree.
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> size(1, 6);
    std::uniform_real_distribution<double> dens(0.0, 1.0);
    std::map<std::string, std::string> oracle_to_ours;
    std::map<std::string, std::string> ours_to_oracle;
    for (int it = 0; it < 400; ++it) {
        Graph g = random_graph(size(rng), dens(rng), rng);
        std::string oracle = min_g6_over_permutations(g);
        std::string ours = canonical_form(g).bytes;
        auto [it1, new1] = oracle_to_ours.emplace(oracle, ours);
        ASSERT_EQ(it1->second, ours);
        auto [it2, new2] = ours_to_oracle.emplace(ours, oracle);
        ASSERT_EQ(it2->second, oracle);
    }
}

TEST(Canonical, Key64MatchesForm) {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> dens(0.0, 1.0);
    for (int it = 0; it < 200; ++it) {
        int n = 1 + it % 9;
        Graph g = random_graph(n, dens(rng), rng);
        Graph rebuilt = graph_from_key64(n, canonical_key64(g));
        ASSERT_EQ(graph6_encode(rebuilt), canonical_form(g).bytes);
    }
}
