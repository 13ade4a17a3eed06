#include "mscs/controller.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "mscs/csv.hpp"
#include "mscs/rng.hpp"

namespace mscs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// RNG substreams per stage: even for selection, odd for responses.
std::uint64_t select_seed(const ControllerConfig& cfg, std::size_t stage) {
    return seed_stream(cfg.seed, 2 * stage);
}
std::uint64_t respond_seed(const ControllerConfig& cfg, std::size_t stage) {
    return seed_stream(cfg.seed, 2 * stage + 1);
}

std::vector<NodeId> sorted_union(std::span<const NodeId> a,
                                 std::span<const NodeId> b) {
    std::vector<NodeId> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(out));
    return out;
}

std::vector<NodeId> unsurveyed_pool(const Graph& g,
                                    std::span<const NodeId> surveyed) {
    std::vector<NodeId> pool;
    pool.reserve(g.node_count() - surveyed.size());
    const auto ids = g.node_ids();
    std::set_difference(ids.begin(), ids.end(), surveyed.begin(),
                        surveyed.end(), std::back_inserter(pool));
    return pool;
}

TargetSet select_targets(const Strategy& strategy, const Graph& g,
                         const NetworkProfile& profile,
                         std::span<const NodeId> surveyed,
                         const ControllerConfig& cfg, std::uint64_t seed) {
    switch (strategy.kind) {
        case StrategyKind::Random: {
            const std::vector<NodeId> pool = unsurveyed_pool(g, surveyed);
            return select_random(pool, cfg.target_size, seed);
        }
        case StrategyKind::KBins: {
            const std::vector<NodeValue> nm = nm_values(profile.measures);
            return select_k_bins(nm, surveyed,
                                 {cfg.kbins, cfg.target_size});
        }
        case StrategyKind::AggregateAscending: {
            const std::vector<NodeValue> agg =
                raw_aggregates(profile.measures);
            return select_aggregate_ascending(agg, surveyed, cfg.target_size);
        }
        case StrategyKind::LowestMeasure:
            return select_lowest_measure(strategy.measure, profile.measures,
                                         surveyed, cfg.target_size);
    }
    throw std::invalid_argument("invalid strategy");
}

} // namespace

void validate(const ControllerConfig& cfg) {
    parse_strategy(cfg.strategy);
    parse_strategy(cfg.initial_strategy);
    if (!(cfg.ev_opt >= 0.0)) {
        throw std::invalid_argument("ev_opt must be >= 0");
    }
    if (cfg.target_size == 0) {
        throw std::invalid_argument("target_size must be >= 1");
    }
    for (const double w : cfg.weights) {
        if (!(w >= 0.0)) throw std::invalid_argument("weights must be >= 0");
    }
    if (cfg.histogram_bins == 0 || cfg.kbins == 0) {
        throw std::invalid_argument("bin counts must be >= 1");
    }
    if (!(cfg.epsilon > 0.0)) {
        throw std::invalid_argument("epsilon must be > 0");
    }
    if (!(cfg.response.rate >= 0.0 && cfg.response.rate <= 1.0)) {
        throw std::invalid_argument("response rate must be in [0, 1]");
    }
}

NetworkProfile build_network_profile(const Graph& g,
                                     std::size_t histogram_bins) {
    if (g.node_count() == 0) {
        throw std::invalid_argument("network profile of an empty graph");
    }
    NetworkProfile p;
    p.histogram_bins = histogram_bins;
    p.measures = compute_node_measures(g);
    p.bounds = compute_bounds(p.measures);
    apply_normalization(p.measures, p.bounds);
    for (std::size_t i = 0; i < kMeasureCount; ++i) {
        std::vector<double> values;
        values.reserve(p.measures.size());
        for (const NodeMeasures& nm : p.measures) {
            values.push_back(nm.normalized[i]);
        }
        p.reference[i] = build_histogram(values, histogram_bins);
    }
    p.avg_degree = 2.0 * static_cast<double>(g.edge_count()) /
                   static_cast<double>(g.node_count());
    return p;
}

std::vector<NodeId> respond(std::span<const NodeId> targets,
                            const ResponseModel& model, const Graph& g,
                            double avg_degree, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<NodeId> responders;
    responders.reserve(targets.size());
    for (const NodeId id : targets) {
        double p = 0.0;
        if (model.rate > 0.0) {
            double factor = 1.0;
            if (model.bias_exponent != 0.0 && avg_degree > 0.0) {
                const double ratio =
                    static_cast<double>(g.degree(g.index_of(id))) / avg_degree;
                factor = std::pow(ratio, model.bias_exponent);
            }
            p = std::min(1.0, model.rate * factor);
            if (!(p > 0.0)) p = 0.0;
        }
        if (rng.next_bernoulli(p)) responders.push_back(id);
    }
    return responders;
}

Evaluation evaluate_surveyed(const Graph& g, const NetworkProfile& profile,
                             std::span<const NodeId> surveyed,
                             const std::array<double, kMeasureCount>& weights,
                             double epsilon) {
    std::array<std::vector<double>, kMeasureCount> values;
    for (auto& v : values) v.reserve(surveyed.size());
    for (const NodeId id : surveyed) {
        const NodeMeasures& nm = profile.measures[g.index_of(id)];
        for (std::size_t i = 0; i < kMeasureCount; ++i) {
            values[i].push_back(nm.normalized[i]);
        }
    }
    return evaluate_sample(profile.reference, values, weights, epsilon);
}

StageRecord run_stage(const Graph& g, const NetworkProfile& profile,
                      SampleState& state, const ControllerConfig& cfg) {
    const std::size_t t = state.stage;
    const Strategy strategy =
        parse_strategy(t == 0 ? cfg.initial_strategy : cfg.strategy);

    const TargetSet targets = select_targets(strategy, g, profile,
                                             state.surveyed, cfg,
                                             select_seed(cfg, t));
    const std::vector<NodeId> responders =
        respond(targets.nodes, cfg.response, g, profile.avg_degree,
                respond_seed(cfg, t));
    state.surveyed = sorted_union(state.surveyed, responders);

    StageRecord rec;
    rec.stage = t;
    rec.targeted = targets.nodes.size();
    rec.responded = responders.size();
    rec.sample_size = state.surveyed.size();
    rec.sample_fraction = static_cast<double>(rec.sample_size) /
                          static_cast<double>(g.node_count());
    if (state.surveyed.empty()) {
        rec.kl.fill(kInf);
        rec.ev = kInf;
        state.last_evaluation = Evaluation{rec.kl, cfg.weights, kInf};
    } else {
        state.last_evaluation = evaluate_surveyed(g, profile, state.surveyed,
                                                  cfg.weights, cfg.epsilon);
        rec.kl = state.last_evaluation.kl;
        rec.ev = state.last_evaluation.ev;
    }
    state.stage = t + 1;
    return rec;
}

std::vector<StageRecord> run_mscs(const Graph& g,
                                  const NetworkProfile& profile,
                                  const ControllerConfig& cfg,
                                  SampleState* final_state) {
    validate(cfg);
    if (g.node_count() == 0) {
        throw std::invalid_argument("run_mscs: empty graph");
    }
    SampleState state;
    std::vector<StageRecord> trajectory;
    for (;;) {
        const StageRecord rec = run_stage(g, profile, state, cfg);
        trajectory.push_back(rec);
        if (rec.ev <= cfg.ev_opt) break;
        if (rec.stage >= cfg.max_stages) break;
        if (state.surveyed.size() == g.node_count()) break;
    }
    if (final_state != nullptr) *final_state = std::move(state);
    return trajectory;
}

std::vector<StageRecord> run_mscs(const Graph& g, const ControllerConfig& cfg,
                                  SampleState* final_state) {
    validate(cfg);
    const NetworkProfile profile =
        build_network_profile(g, cfg.histogram_bins);
    return run_mscs(g, profile, cfg, final_state);
}

SampleState prune_sample(const Graph& g, const NetworkProfile& profile,
                         const SampleState& state, const ControllerConfig& cfg,
                         std::size_t min_size) {
    if (min_size < 1) {
        throw std::invalid_argument("prune_sample: min_size must be >= 1");
    }
    SampleState pruned = state;
    if (pruned.surveyed.size() <= min_size) return pruned;

    // Per-measure bin counts of the current sample; removing a node only
    // touches one bin per measure, so candidate evaluations reuse them.
    const std::size_t bins = profile.histogram_bins;
    std::array<std::vector<std::size_t>, kMeasureCount> counts;
    for (auto& c : counts) c.assign(bins, 0);
    for (const NodeId id : pruned.surveyed) {
        const NodeMeasures& nm = profile.measures[g.index_of(id)];
        for (std::size_t i = 0; i < kMeasureCount; ++i) {
            ++counts[i][bin_index(nm.normalized[i], 0.0, 1.0, bins)];
        }
    }

    const auto eval_counts = [&](std::size_t total) {
        Evaluation ev;
        ev.weights = cfg.weights;
        std::vector<double> probs(bins);
        for (std::size_t i = 0; i < kMeasureCount; ++i) {
            for (std::size_t k = 0; k < bins; ++k) {
                probs[k] = static_cast<double>(counts[i][k]) /
                           static_cast<double>(total);
            }
            ev.kl[i] = detail::kl_smoothed(profile.reference[i].probs, probs,
                                           cfg.epsilon);
            ev.ev += ev.kl[i] * ev.weights[i];
        }
        return ev;
    };

    Evaluation current = eval_counts(pruned.surveyed.size());
    while (pruned.surveyed.size() > min_size) {
        double best_ev = current.ev;
        std::size_t best_pos = pruned.surveyed.size();
        for (std::size_t pos = 0; pos < pruned.surveyed.size(); ++pos) {
            const NodeMeasures& nm =
                profile.measures[g.index_of(pruned.surveyed[pos])];
            std::array<std::size_t, kMeasureCount> touched{};
            for (std::size_t i = 0; i < kMeasureCount; ++i) {
                touched[i] = bin_index(nm.normalized[i], 0.0, 1.0, bins);
                --counts[i][touched[i]];
            }
            const Evaluation ev = eval_counts(pruned.surveyed.size() - 1);
            for (std::size_t i = 0; i < kMeasureCount; ++i) {
                ++counts[i][touched[i]];
            }
            if (ev.ev < best_ev) { // strict: first minimum keeps lowest id
                best_ev = ev.ev;
                best_pos = pos;
            }
        }
        if (best_pos == pruned.surveyed.size()) break; // no improvement
        const NodeMeasures& nm =
            profile.measures[g.index_of(pruned.surveyed[best_pos])];
        for (std::size_t i = 0; i < kMeasureCount; ++i) {
            --counts[i][bin_index(nm.normalized[i], 0.0, 1.0, bins)];
        }
        pruned.surveyed.erase(pruned.surveyed.begin() +
                              static_cast<std::ptrdiff_t>(best_pos));
        current = eval_counts(pruned.surveyed.size());
    }
    pruned.last_evaluation = current;
    return pruned;
}

void write_trajectory_header(std::ostream& out) {
    out << "run_id,strategy,seed,stage,targeted,responded,sample_size,"
           "sample_fraction,kl_indegree,kl_outdegree,kl_degree,kl_clustering,"
           "ev\n";
}

void write_trajectory_row(std::ostream& out, const RunInfo& run,
                          const StageRecord& rec) {
    out << run.run_id << ',' << run.strategy << ',' << run.seed << ','
        << rec.stage << ',' << rec.targeted << ',' << rec.responded << ','
        << rec.sample_size << ',' << format_number(rec.sample_fraction);
    for (std::size_t i = 0; i < kMeasureCount; ++i) {
        out << ',' << format_number(rec.kl[i]);
    }
    out << ',' << format_number(rec.ev) << '\n';
}

} // namespace mscs
