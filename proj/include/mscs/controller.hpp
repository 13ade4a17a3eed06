#ifndef MSCS_CONTROLLER_HPP
#define MSCS_CONTROLLER_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mscs/distribution.hpp"
#include "mscs/graph.hpp"
#include "mscs/measures.hpp"
#include "mscs/strategies.hpp"

namespace mscs {

// Survey response behavior: each target responds independently with
// probability min(1, rate * (degree / avg_degree)^bias_exponent). A zero
// exponent gives plain Bernoulli(rate).
struct ResponseModel {
    double rate = 1.0;
    double bias_exponent = 0.0;
};

struct ControllerConfig {
    std::string strategy = "random";
    std::string initial_strategy = "random"; // stage-0 selection
    double ev_opt = 0.0;
    std::size_t max_stages = 50;
    std::size_t target_size = 10;
    std::array<double, kMeasureCount> weights = {1.0, 1.0, 1.0, 1.0};
    std::size_t histogram_bins = 20; // per-measure histogram resolution
    std::size_t kbins = 20;          // stratification bins of select_k_bins
    double epsilon = 1e-6;
    std::uint64_t seed = 0;
    ResponseModel response;
};

// Throws std::invalid_argument on bad strategy names, negative weights,
// non-positive epsilon, zero bin counts or an out-of-range response rate.
void validate(const ControllerConfig& cfg);

// Everything derived from the full network once per run: per-node measures
// (normalized), the normalization bounds and the reference distributions the
// sample is compared against. Shared read-only across runs.
struct NetworkProfile {
    std::vector<NodeMeasures> measures; // dense index order
    NormalizationBounds bounds;
    std::array<Distribution, kMeasureCount> reference;
    std::size_t histogram_bins = 20;
    double avg_degree = 0.0;
};

NetworkProfile build_network_profile(const Graph& g,
                                     std::size_t histogram_bins);

// The surveyed set and where the loop stands.
struct SampleState {
    std::vector<NodeId> surveyed; // sorted ascending
    std::size_t stage = 0;        // next stage to run
    Evaluation last_evaluation;
};

// One row of the controller log.
struct StageRecord {
    std::size_t stage = 0;
    std::size_t targeted = 0;
    std::size_t responded = 0;
    std::size_t sample_size = 0;
    double sample_fraction = 0.0;
    std::array<double, kMeasureCount> kl{};
    double ev = 0.0;
};

// Draws the responders among `targets`; deterministic per seed.
std::vector<NodeId> respond(std::span<const NodeId> targets,
                            const ResponseModel& model, const Graph& g,
                            double avg_degree, std::uint64_t seed);

// Runs stage state.stage: select targets, draw responders, extend the
// sample, evaluate. When nobody has ever responded the evaluation is skipped
// and ev is recorded as +infinity.
StageRecord run_stage(const Graph& g, const NetworkProfile& profile,
                      SampleState& state, const ControllerConfig& cfg);

// The full multistage loop: stages run until ev <= ev_opt, the stage counter
// reaches max_stages, or no unsurveyed node remains.
std::vector<StageRecord> run_mscs(const Graph& g,
                                  const NetworkProfile& profile,
                                  const ControllerConfig& cfg,
                                  SampleState* final_state = nullptr);
std::vector<StageRecord> run_mscs(const Graph& g, const ControllerConfig& cfg,
                                  SampleState* final_state = nullptr);

// Greedy pruning: repeatedly removes the surveyed node whose removal lowers
// ev the most (ties by id) while ev strictly improves and the sample stays
// above min_size. A sample already at or below min_size is returned as-is.
SampleState prune_sample(const Graph& g, const NetworkProfile& profile,
                         const SampleState& state, const ControllerConfig& cfg,
                         std::size_t min_size);

// Evaluation of an explicit surveyed set against the profile's reference.
Evaluation evaluate_surveyed(const Graph& g, const NetworkProfile& profile,
                             std::span<const NodeId> surveyed,
                             const std::array<double, kMeasureCount>& weights,
                             double epsilon);

// Identifies one run among many in a shared trajectory file.
struct RunInfo {
    std::size_t run_id = 0;
    std::string strategy;
    std::uint64_t seed = 0;
};

void write_trajectory_header(std::ostream& out);
void write_trajectory_row(std::ostream& out, const RunInfo& run,
                          const StageRecord& rec);

} // namespace mscs

#endif
