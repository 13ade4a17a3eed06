#include <doctest.h>

#include <vector>

#include "mscs/graph.hpp"
#include "mscs/measures.hpp"
#include "mscs/rng.hpp"

using namespace mscs;

namespace {

// Independent clustering oracle: adjacency-matrix triangle enumeration on
// the undirected projection.
double clustering_oracle(const Graph& g, std::size_t u) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
        for (const std::uint32_t b : g.out_neighbors(a)) {
            adj[a][b] = true;
            adj[b][a] = true;
        }
    }
    std::vector<std::size_t> nbrs;
    for (std::size_t v = 0; v < n; ++v) {
        if (v != u && adj[u][v]) nbrs.push_back(v);
    }
    if (nbrs.size() < 2) return 0.0;
    std::size_t links = 0;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            if (adj[nbrs[i]][nbrs[j]]) ++links;
        }
    }
    return static_cast<double>(links) /
           (0.5 * static_cast<double>(nbrs.size()) *
            static_cast<double>(nbrs.size() - 1));
}

Graph random_graph(Rng& rng, std::size_t max_nodes) {
    const std::size_t n = 2 + rng.next_below(max_nodes - 1);
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<NodeId> nodes(n);
    for (std::size_t i = 0; i < n; ++i) nodes[i] = i;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && rng.next_bernoulli(0.3)) edges.emplace_back(a, b);
        }
    }
    return Graph::build(std::move(nodes), std::move(edges));
}

} // namespace

TEST_CASE("reciprocal triangle: full degrees and clustering 1") {
    const Graph g = load_edge_list("1 2\n2 1\n2 3\n3 2\n1 3\n3 1");
    for (const NodeMeasures& nm : compute_node_measures(g)) {
        CHECK(nm.indegree == 2);
        CHECK(nm.outdegree == 2);
        CHECK(nm.degree == 4);
        CHECK(nm.clustering == 1.0);
    }
}

TEST_CASE("isolated node has all-zero raw measures") {
    const Graph g = Graph::build({1, 2, 3}, {{1, 2}});
    const auto measures = compute_node_measures(g);
    const NodeMeasures& isolated = measures[g.index_of(3)];
    CHECK(isolated.indegree == 0);
    CHECK(isolated.outdegree == 0);
    CHECK(isolated.degree == 0);
    CHECK(isolated.clustering == 0.0);
}

TEST_CASE("directed path: middle node degrees, no clustering") {
    const Graph g = load_edge_list("1 2\n2 3");
    const auto measures = compute_node_measures(g);
    const NodeMeasures& mid = measures[g.index_of(2)];
    CHECK(mid.indegree == 1);
    CHECK(mid.outdegree == 1);
    CHECK(mid.degree == 2);
    CHECK(mid.clustering == 0.0);
}

TEST_CASE("star center has clustering 0") {
    const Graph g = load_edge_list("0 1\n0 2\n0 3\n0 4");
    CHECK(local_clustering(g, 0) == 0.0);
}

TEST_CASE("chorded square: node off the chord closes its neighborhood") {
    // 4-cycle 1-2-3-4 (reciprocal) plus chord 1-3; node 2's neighbors {1,3}
    // are adjacent.
    const Graph g = load_edge_list(
        "1 2\n2 1\n2 3\n3 2\n3 4\n4 3\n4 1\n1 4\n1 3\n3 1");
    CHECK(local_clustering(g, 2) == 1.0);
    CHECK(local_clustering(g, 1) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("local_clustering throws for unknown nodes") {
    const Graph g = load_edge_list("1 2");
    CHECK_THROWS_AS(local_clustering(g, 99), std::out_of_range);
}

TEST_CASE("clustering matches the brute-force oracle on random graphs") {
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_graph(rng, 8);
        const auto measures = compute_node_measures(g);
        for (std::size_t u = 0; u < g.node_count(); ++u) {
            CHECK(measures[u].clustering == clustering_oracle(g, u));
        }
    }
}

TEST_CASE("edge direction does not matter for the undirected projection") {
    // One-way triangle clusters exactly like a reciprocal one.
    const Graph g = load_edge_list("1 2\n2 3\n3 1");
    CHECK(local_clustering(g, 1) == 1.0);
    CHECK(local_clustering(g, 2) == 1.0);
}

TEST_CASE("measure names round-trip") {
    for (const Measure m : kAllMeasures) {
        CHECK(parse_measure(measure_name(m)) == m);
    }
    CHECK_THROWS_AS(parse_measure("betweenness"), std::invalid_argument);
}

TEST_CASE("raw_aggregate sums the four raw measures") {
    NodeMeasures nm;
    nm.indegree = 2;
    nm.outdegree = 3;
    nm.degree = 5;
    nm.clustering = 0.5;
    CHECK(raw_aggregate(nm) == doctest::Approx(10.5));
}
