#ifndef MSCS_STRATEGIES_HPP
#define MSCS_STRATEGIES_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mscs/measures.hpp"

namespace mscs {

// Target-set selection strategies, configured by name:
//   "random" | "kbins" | "agg-asc" | "lowest:<measure>"
enum class StrategyKind {
    Random,
    KBins,
    AggregateAscending,
    LowestMeasure,
};

struct Strategy {
    StrategyKind kind = StrategyKind::Random;
    Measure measure = Measure::Indegree; // only for LowestMeasure
};

Strategy parse_strategy(std::string_view name); // throws on unknown names
std::string strategy_name(const Strategy& s);

struct KBinsConfig {
    std::size_t bins = 20;        // K
    std::size_t target_size = 1;  // requested |T| per stage
};

// Nodes picked for surveying in one stage, ascending by id and disjoint from
// the surveyed set they were selected against.
struct TargetSet {
    std::vector<NodeId> nodes;
};

// (node, scalar) pair; the scalar is the aggregated normalized measure for
// the stratified strategy and a raw aggregate for the ascending baseline.
struct NodeValue {
    NodeId node = 0;
    double value = 0.0;
};

// `surveyed` is always a sorted id list; every strategy returns a set
// disjoint from it. All selection is deterministic; only select_random
// consumes randomness, and none depends on input iteration order.

// Uniform sample without replacement of min(count, |pool|) pool nodes.
// The pool must already exclude surveyed nodes.
TargetSet select_random(std::span<const NodeId> pool, std::size_t count,
                        std::uint64_t seed);

// Stratifies the aggregated normalized measure into cfg.bins equal-width
// bins over [0, kMeasureCount] and draws a size-proportional quota (at least
// one) from every non-empty bin. Within a bin, unsurveyed candidates are
// ordered by value (ties by id) and picked at evenly spaced ranks starting
// from the bin borders, which spreads each quota over the bin's full value
// range. `nm` must cover all nodes of the network.
TargetSet select_k_bins(std::span<const NodeValue> nm,
                        std::span<const NodeId> surveyed,
                        const KBinsConfig& cfg);

// Per-bin quotas of select_k_bins: max(1, round(target_size * N_k / N)) for
// non-empty bins, 0 for empty ones.
std::vector<std::size_t> k_bins_quotas(std::span<const NodeValue> nm,
                                       const KBinsConfig& cfg);

// The `count` unsurveyed nodes with the lowest aggregate value, ties by id.
TargetSet select_aggregate_ascending(std::span<const NodeValue> aggregates,
                                     std::span<const NodeId> surveyed,
                                     std::size_t count);

// The `count` unsurveyed nodes with the lowest value of one raw measure.
TargetSet select_lowest_measure(Measure measure,
                                std::span<const NodeMeasures> measures,
                                std::span<const NodeId> surveyed,
                                std::size_t count);

// NM pairs for select_k_bins, from records whose normalization is filled in.
std::vector<NodeValue> nm_values(std::span<const NodeMeasures> measures);

// Raw-aggregate pairs for select_aggregate_ascending.
std::vector<NodeValue> raw_aggregates(std::span<const NodeMeasures> measures);

} // namespace mscs

#endif
