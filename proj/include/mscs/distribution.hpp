#ifndef MSCS_DISTRIBUTION_HPP
#define MSCS_DISTRIBUTION_HPP

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "mscs/measures.hpp"

namespace mscs {

// Min/max of one measure over the full network.
struct Bounds {
    double min = 0.0;
    double max = 0.0;
};

struct NormalizationBounds {
    std::array<Bounds, kMeasureCount> measure{};
};

// Per-measure min and max over all nodes. Throws on an empty collection.
NormalizationBounds compute_bounds(std::span<const NodeMeasures> measures);

// (value - min) / (max - min), clamped to [0, 1]; 0 for degenerate bounds.
double normalize(double value, Bounds b);

// Fills the normalized fields and the aggregated measure of every record.
// Bounds always come from the full network, never from a sample.
void apply_normalization(std::span<NodeMeasures> measures,
                         const NormalizationBounds& bounds);

// Sum of normalized values, in [0, kMeasureCount].
double aggregate_nm(std::span<const double> normalized);

// Equal-width histogram over [0, 1]. probs sum to 1; the last bin is closed
// on the right so a value of exactly 1 lands in it.
struct Distribution {
    std::vector<double> edges; // bins() + 1 ascending boundaries
    std::vector<double> probs;

    std::size_t bins() const { return probs.size(); }
};

// Bin of `value` in an equal-width histogram over [lo, hi]; values outside
// the range clamp to the boundary bins.
std::size_t bin_index(double value, double lo, double hi, std::size_t bins);

Distribution build_histogram(std::span<const double> values,
                             std::size_t bin_count);

// Kullback-Leibler divergence KL(p || q) in nats. Both distributions get
// `epsilon` additive mass per bin and are renormalized first, which keeps
// the result finite on empty bins. Throws when the bin edges differ.
double kl_divergence(const Distribution& p, const Distribution& q,
                     double epsilon);

namespace detail {
// The smoothing + divergence kernel shared by kl_divergence and the
// incremental evaluation inside pruning; p and q must have equal length.
double kl_smoothed(std::span<const double> p, std::span<const double> q,
                   double epsilon);
} // namespace detail

// One stage evaluation: the per-measure divergence terms and their weighted
// sum, the quantity the sampling loop drives toward zero.
struct Evaluation {
    std::array<double, kMeasureCount> kl{};
    std::array<double, kMeasureCount> weights{};
    double ev = 0.0;
};

// Builds the sample histogram of each measure on the reference bin edges and
// returns KL(reference || sample) combined with the given weights. Throws on
// an empty sample or a negative weight.
Evaluation evaluate_sample(
    const std::array<Distribution, kMeasureCount>& reference,
    const std::array<std::vector<double>, kMeasureCount>& sample_values,
    const std::array<double, kMeasureCount>& weights, double epsilon);

// CSV rows: measure, bin index, left edge, right edge, probability.
void write_distribution_csv(std::ostream& out, std::string_view measure,
                            const Distribution& d);

} // namespace mscs

#endif
