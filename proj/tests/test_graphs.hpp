#ifndef EXGRAPH_TESTS_TEST_GRAPHS_HPP
#define EXGRAPH_TESTS_TEST_GRAPHS_HPP

#include <random>

#include "exgraph/graph.hpp"

namespace exg::testutil {

inline Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return graph_from_edges(n, e);
}

inline Graph cycle(int n) {
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return graph_from_edges(n, e);
}

inline Graph path(int n) {
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return graph_from_edges(n, e);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return graph_from_edges(a + b, e);
}

inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

inline Graph petersen() {
    std::vector<Edge> e;
    for (int v = 0; v < 5; ++v) {
        e.emplace_back(v, (v + 1) % 5);          // outer C5
        e.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        e.emplace_back(v, 5 + v);                // spokes
    }
    return graph_from_edges(10, e);
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) e.emplace_back(u, v);
    return graph_from_edges(n, e);
}

}  // namespace exg::testutil

#endif
