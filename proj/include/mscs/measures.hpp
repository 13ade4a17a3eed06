#ifndef MSCS_MEASURES_HPP
#define MSCS_MEASURES_HPP

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "mscs/graph.hpp"

namespace mscs {

// The local structural measures tracked per node, in the order used for
// weights, evaluation terms and CSV columns.
enum class Measure : std::size_t {
    Indegree = 0,
    Outdegree = 1,
    Degree = 2,
    Clustering = 3,
};

inline constexpr std::size_t kMeasureCount = 4;

inline constexpr std::array<Measure, kMeasureCount> kAllMeasures = {
    Measure::Indegree, Measure::Outdegree, Measure::Degree,
    Measure::Clustering};

std::string_view measure_name(Measure m);
Measure parse_measure(std::string_view name); // throws on unknown names

// Raw and normalized measure values for one node. `normalized` and `nm`
// stay zero until apply_normalization fills them.
struct NodeMeasures {
    NodeId node = 0;
    std::size_t indegree = 0;
    std::size_t outdegree = 0;
    std::size_t degree = 0; // indegree + outdegree
    double clustering = 0.0;
    std::array<double, kMeasureCount> normalized{};
    double nm = 0.0; // sum of normalized values, in [0, kMeasureCount]
};

double raw_measure(const NodeMeasures& nm, Measure m);

// Sum of the raw measure values; the ordering key of the ascending-aggregate
// baseline strategy.
double raw_aggregate(const NodeMeasures& nm);

// One record per node, in dense index order. Normalized fields are left
// empty here.
std::vector<NodeMeasures> compute_node_measures(const Graph& g);

// Clustering coefficient on the undirected projection: the fraction of the
// node's neighbor pairs that are themselves adjacent (in either direction).
// Zero for nodes with fewer than two neighbors.
double local_clustering(const Graph& g, NodeId node);

// Whole-network aggregates.
struct SummaryStats {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    double reciprocal_fraction = 0.0; // directed edges whose reverse exists
    double avg_indegree = 0.0;
    double avg_outdegree = 0.0;
    double avg_degree = 0.0;
    double avg_clustering = 0.0;
};

SummaryStats summary_stats(const Graph& g);

} // namespace mscs

#endif
