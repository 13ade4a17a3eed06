#include "mscs/measures.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mscs {

std::string_view measure_name(Measure m) {
    switch (m) {
        case Measure::Indegree: return "indegree";
        case Measure::Outdegree: return "outdegree";
        case Measure::Degree: return "degree";
        case Measure::Clustering: return "clustering";
    }
    throw std::invalid_argument("invalid measure");
}

Measure parse_measure(std::string_view name) {
    for (const Measure m : kAllMeasures) {
        if (measure_name(m) == name) return m;
    }
    throw std::invalid_argument("unknown measure '" + std::string(name) + "'");
}

double raw_measure(const NodeMeasures& nm, Measure m) {
    switch (m) {
        case Measure::Indegree: return static_cast<double>(nm.indegree);
        case Measure::Outdegree: return static_cast<double>(nm.outdegree);
        case Measure::Degree: return static_cast<double>(nm.degree);
        case Measure::Clustering: return nm.clustering;
    }
    throw std::invalid_argument("invalid measure");
}

double raw_aggregate(const NodeMeasures& nm) {
    double sum = 0.0;
    for (const Measure m : kAllMeasures) sum += raw_measure(nm, m);
    return sum;
}

namespace {

// Undirected projection adjacency: per node, the sorted union of in- and
// out-neighbors.
std::vector<std::vector<std::uint32_t>> undirected_adjacency(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (std::size_t u = 0; u < n; ++u) {
        const auto out = g.out_neighbors(u);
        const auto in = g.in_neighbors(u);
        auto& row = adj[u];
        row.resize(out.size() + in.size());
        std::merge(out.begin(), out.end(), in.begin(), in.end(), row.begin());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return adj;
}

std::size_t sorted_intersection_size(std::span<const std::uint32_t> a,
                                     std::span<const std::uint32_t> b) {
    std::size_t count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

double clustering_of(const std::vector<std::vector<std::uint32_t>>& adj,
                     std::size_t u) {
    const auto& nbrs = adj[u];
    const std::size_t k = nbrs.size();
    if (k < 2) return 0.0;
    // Each edge between two neighbors is seen from both endpoints.
    std::size_t twice_links = 0;
    for (const std::uint32_t v : nbrs) {
        twice_links += sorted_intersection_size(adj[v], nbrs);
    }
    const double pairs = 0.5 * static_cast<double>(k) * static_cast<double>(k - 1);
    return static_cast<double>(twice_links) / 2.0 / pairs;
}

} // namespace

std::vector<NodeMeasures> compute_node_measures(const Graph& g) {
    const std::size_t n = g.node_count();
    const auto adj = undirected_adjacency(g);
    std::vector<NodeMeasures> out(n);
    for (std::size_t u = 0; u < n; ++u) {
        NodeMeasures& nm = out[u];
        nm.node = g.id_at(u);
        nm.indegree = g.indegree(u);
        nm.outdegree = g.outdegree(u);
        nm.degree = nm.indegree + nm.outdegree;
        nm.clustering = clustering_of(adj, u);
    }
    return out;
}

double local_clustering(const Graph& g, NodeId node) {
    const std::size_t u = g.index_of(node); // throws for unknown nodes
    const auto adj = undirected_adjacency(g);
    return clustering_of(adj, u);
}

SummaryStats summary_stats(const Graph& g) {
    SummaryStats s;
    s.node_count = g.node_count();
    s.edge_count = g.edge_count();
    if (s.node_count == 0) return s;

    std::size_t reciprocal = 0;
    for (std::size_t u = 0; u < s.node_count; ++u) {
        for (const std::uint32_t v : g.out_neighbors(u)) {
            if (g.has_edge(v, u)) ++reciprocal;
        }
    }
    s.reciprocal_fraction =
        s.edge_count == 0
            ? 0.0
            : static_cast<double>(reciprocal) / static_cast<double>(s.edge_count);

    const double n = static_cast<double>(s.node_count);
    const double e = static_cast<double>(s.edge_count);
    s.avg_indegree = e / n;
    s.avg_outdegree = e / n;
    s.avg_degree = 2.0 * e / n;

    const auto adj = undirected_adjacency(g);
    double total = 0.0;
    for (std::size_t u = 0; u < s.node_count; ++u) {
        total += clustering_of(adj, u);
    }
    s.avg_clustering = total / n;
    return s;
}

} // namespace mscs
