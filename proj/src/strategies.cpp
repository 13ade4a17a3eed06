#include "mscs/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mscs/distribution.hpp"
#include "mscs/rng.hpp"

namespace mscs {

Strategy parse_strategy(std::string_view name) {
    if (name == "random") return {StrategyKind::Random};
    if (name == "kbins") return {StrategyKind::KBins};
    if (name == "agg-asc") return {StrategyKind::AggregateAscending};
    constexpr std::string_view prefix = "lowest:";
    if (name.starts_with(prefix)) {
        return {StrategyKind::LowestMeasure,
                parse_measure(name.substr(prefix.size()))};
    }
    throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

std::string strategy_name(const Strategy& s) {
    switch (s.kind) {
        case StrategyKind::Random: return "random";
        case StrategyKind::KBins: return "kbins";
        case StrategyKind::AggregateAscending: return "agg-asc";
        case StrategyKind::LowestMeasure:
            return "lowest:" + std::string(measure_name(s.measure));
    }
    throw std::invalid_argument("invalid strategy");
}

namespace {

bool is_surveyed(std::span<const NodeId> surveyed, NodeId id) {
    return std::binary_search(surveyed.begin(), surveyed.end(), id);
}

// Lowest-value-first order with ids breaking ties, shared by every
// deterministic strategy.
std::vector<NodeValue> sorted_by_value(std::span<const NodeValue> values) {
    std::vector<NodeValue> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const NodeValue& a, const NodeValue& b) {
                  if (a.value != b.value) return a.value < b.value;
                  return a.node < b.node;
              });
    return sorted;
}

TargetSet take_lowest(std::span<const NodeValue> values,
                      std::span<const NodeId> surveyed, std::size_t count) {
    const std::vector<NodeValue> sorted = sorted_by_value(values);
    TargetSet t;
    for (const NodeValue& nv : sorted) {
        if (t.nodes.size() == count) break;
        if (!is_surveyed(surveyed, nv.node)) t.nodes.push_back(nv.node);
    }
    std::sort(t.nodes.begin(), t.nodes.end());
    return t;
}

} // namespace

TargetSet select_random(std::span<const NodeId> pool, std::size_t count,
                        std::uint64_t seed) {
    std::vector<NodeId> nodes(pool.begin(), pool.end());
    std::sort(nodes.begin(), nodes.end());
    const std::size_t take = std::min(count, nodes.size());
    Rng rng(seed);
    for (std::size_t i = 0; i < take; ++i) {
        const std::size_t j = i + rng.next_below(nodes.size() - i);
        std::swap(nodes[i], nodes[j]);
    }
    nodes.resize(take);
    std::sort(nodes.begin(), nodes.end());
    return {std::move(nodes)};
}

std::vector<std::size_t> k_bins_quotas(std::span<const NodeValue> nm,
                                       const KBinsConfig& cfg) {
    if (cfg.bins == 0 || cfg.target_size == 0) {
        throw std::invalid_argument("k_bins: bins and target_size must be >= 1");
    }
    std::vector<std::size_t> bin_sizes(cfg.bins, 0);
    for (const NodeValue& nv : nm) {
        ++bin_sizes[bin_index(nv.value, 0.0, static_cast<double>(kMeasureCount),
                              cfg.bins)];
    }
    const double total = static_cast<double>(nm.size());
    std::vector<std::size_t> quotas(cfg.bins, 0);
    for (std::size_t k = 0; k < cfg.bins; ++k) {
        if (bin_sizes[k] == 0) continue;
        const double share = static_cast<double>(cfg.target_size) *
                             static_cast<double>(bin_sizes[k]) / total;
        quotas[k] = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::floor(share + 0.5)));
    }
    return quotas;
}

TargetSet select_k_bins(std::span<const NodeValue> nm,
                        std::span<const NodeId> surveyed,
                        const KBinsConfig& cfg) {
    const std::vector<std::size_t> quotas = k_bins_quotas(nm, cfg);

    std::vector<std::vector<NodeValue>> candidates(cfg.bins);
    for (const NodeValue& nv : sorted_by_value(nm)) {
        if (is_surveyed(surveyed, nv.node)) continue;
        candidates[bin_index(nv.value, 0.0,
                             static_cast<double>(kMeasureCount), cfg.bins)]
            .push_back(nv);
    }

    TargetSet t;
    for (std::size_t k = 0; k < cfg.bins; ++k) {
        const auto& bin = candidates[k];
        const std::size_t take = std::min(quotas[k], bin.size());
        if (take == 0) continue;
        if (take == bin.size()) {
            for (const NodeValue& nv : bin) t.nodes.push_back(nv.node);
            continue;
        }
        // Evenly spaced ranks across the bin, borders included, so the picks
        // represent the bin's whole value range instead of its extremes.
        if (take == 1) {
            t.nodes.push_back(bin.front().node);
            continue;
        }
        const double stride = static_cast<double>(bin.size() - 1) /
                              static_cast<double>(take - 1);
        for (std::size_t i = 0; i < take; ++i) {
            const auto pos = static_cast<std::size_t>(
                std::llround(static_cast<double>(i) * stride));
            t.nodes.push_back(bin[pos].node);
        }
    }
    std::sort(t.nodes.begin(), t.nodes.end());
    return t;
}

TargetSet select_aggregate_ascending(std::span<const NodeValue> aggregates,
                                     std::span<const NodeId> surveyed,
                                     std::size_t count) {
    return take_lowest(aggregates, surveyed, count);
}

TargetSet select_lowest_measure(Measure measure,
                                std::span<const NodeMeasures> measures,
                                std::span<const NodeId> surveyed,
                                std::size_t count) {
    std::vector<NodeValue> values;
    values.reserve(measures.size());
    for (const NodeMeasures& nm : measures) {
        values.push_back({nm.node, raw_measure(nm, measure)});
    }
    return take_lowest(values, surveyed, count);
}

std::vector<NodeValue> nm_values(std::span<const NodeMeasures> measures) {
    std::vector<NodeValue> out;
    out.reserve(measures.size());
    for (const NodeMeasures& nm : measures) out.push_back({nm.node, nm.nm});
    return out;
}

std::vector<NodeValue> raw_aggregates(std::span<const NodeMeasures> measures) {
    std::vector<NodeValue> out;
    out.reserve(measures.size());
    for (const NodeMeasures& nm : measures) {
        out.push_back({nm.node, raw_aggregate(nm)});
    }
    return out;
}

} // namespace mscs
