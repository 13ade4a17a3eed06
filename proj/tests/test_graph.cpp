#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <vector>

#include "mscs/graph.hpp"
#include "mscs/measures.hpp"
#include "mscs/rng.hpp"

using namespace mscs;

TEST_CASE("load_edge_list parses whitespace and comma separators") {
    const Graph g = load_edge_list("1 2\n2,1\n2 3");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(g.index_of(2), g.index_of(1)));
}

TEST_CASE("load_edge_list on empty input gives an empty graph") {
    const Graph g = load_edge_list("");
    CHECK(g.node_count() == 0);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("load_edge_list collapses duplicates and drops self-loops") {
    LoadStats stats;
    const Graph g = load_edge_list("1 2\n1 2\n3 3", &stats);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 1);
    CHECK(stats.duplicates_skipped == 1);
    CHECK(stats.self_loops_skipped == 1);
}

TEST_CASE("load_edge_list skips comments and blank lines") {
    const Graph g = load_edge_list("# header\n\n1 2\n  # indented comment\n");
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("load_edge_list rejects malformed lines with the line number") {
    CHECK_THROWS_WITH_AS(load_edge_list("1 2\n1 x"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(load_edge_list("1 2\n\n3 -4"),
                         doctest::Contains("line 3"), ParseError);
    CHECK_THROWS_AS(load_edge_list("1 2 3"), ParseError);
    CHECK_THROWS_AS(load_edge_list("7"), ParseError);
}

TEST_CASE("load_edge_list is idempotent under line reordering") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::string> lines;
        for (int e = 0; e < 30; ++e) {
            const NodeId a = rng.next_below(12);
            const NodeId b = rng.next_below(12);
            if (a == b) continue;
            lines.push_back(std::to_string(a) + " " + std::to_string(b));
        }
        std::string forward;
        std::string shuffled;
        std::vector<std::string> perm = lines;
        for (std::size_t i = perm.size(); i > 1; --i) {
            std::swap(perm[i - 1], perm[rng.next_below(i)]);
        }
        for (const auto& l : lines) forward += l + "\n";
        for (const auto& l : perm) shuffled += l + "\n";
        CHECK(load_edge_list(forward) == load_edge_list(shuffled));
    }
}

TEST_CASE("edge list round-trips through write_edge_list") {
    const Graph g = load_edge_list("5 1\n1 5\n9 5\n1 9");
    std::ostringstream out;
    write_edge_list(out, g);
    CHECK(load_edge_list(out.str()) == g);
}

TEST_CASE("unknown node lookups throw") {
    const Graph g = load_edge_list("1 2");
    CHECK_THROWS_AS(g.index_of(7), std::out_of_range);
    CHECK(!g.has_node(7));
    CHECK(g.has_node(2));
}

TEST_CASE("degree sums match the edge count on random graphs") {
    Rng rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<std::pair<NodeId, NodeId>> edges;
        const std::size_t n = 2 + rng.next_below(20);
        for (int e = 0; e < 60; ++e) {
            const NodeId a = rng.next_below(n);
            const NodeId b = rng.next_below(n);
            if (a != b) edges.emplace_back(a, b);
        }
        const Graph g = Graph::build({}, edges);
        std::size_t in_sum = 0;
        std::size_t out_sum = 0;
        for (std::size_t u = 0; u < g.node_count(); ++u) {
            in_sum += g.indegree(u);
            out_sum += g.outdegree(u);
        }
        CHECK(in_sum == g.edge_count());
        CHECK(out_sum == g.edge_count());
    }
}

TEST_CASE("summary_stats reports the documented reciprocity example") {
    const SummaryStats s = summary_stats(load_edge_list("1 2\n2 1\n2 3"));
    CHECK(s.node_count == 3);
    CHECK(s.edge_count == 3);
    CHECK(s.reciprocal_fraction == doctest::Approx(2.0 / 3.0).epsilon(1e-4));
}

TEST_CASE("summary_stats on a single node is all zeros") {
    const Graph g = Graph::build({42}, {});
    const SummaryStats s = summary_stats(g);
    CHECK(s.node_count == 1);
    CHECK(s.edge_count == 0);
    CHECK(s.avg_indegree == 0.0);
    CHECK(s.avg_outdegree == 0.0);
    CHECK(s.avg_degree == 0.0);
    CHECK(s.avg_clustering == 0.0);
    CHECK(s.reciprocal_fraction == 0.0);
}

TEST_CASE("reciprocal_fraction is 1 on purely reciprocal graphs") {
    Rng rng(5);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int e = 0; e < 40; ++e) {
        const NodeId a = rng.next_below(15);
        const NodeId b = rng.next_below(15);
        if (a == b) continue;
        edges.emplace_back(a, b);
        edges.emplace_back(b, a);
    }
    const SummaryStats s = summary_stats(Graph::build({}, edges));
    CHECK(s.reciprocal_fraction == 1.0);
}

TEST_CASE("averages follow edge count over node count") {
    // 4 nodes in a directed cycle: E = 4, N = 4.
    const SummaryStats s = summary_stats(load_edge_list("0 1\n1 2\n2 3\n3 0"));
    CHECK(s.avg_indegree == doctest::Approx(1.0));
    CHECK(s.avg_outdegree == doctest::Approx(1.0));
    CHECK(s.avg_degree == doctest::Approx(2.0));
}
