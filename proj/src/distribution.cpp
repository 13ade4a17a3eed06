#include "mscs/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "mscs/csv.hpp"

namespace mscs {

NormalizationBounds compute_bounds(std::span<const NodeMeasures> measures) {
    if (measures.empty()) {
        throw std::invalid_argument("compute_bounds: empty measure collection");
    }
    NormalizationBounds b;
    for (std::size_t i = 0; i < kMeasureCount; ++i) {
        const Measure m = kAllMeasures[i];
        double lo = raw_measure(measures.front(), m);
        double hi = lo;
        for (const NodeMeasures& nm : measures) {
            const double v = raw_measure(nm, m);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        b.measure[i] = {lo, hi};
    }
    return b;
}

double normalize(double value, Bounds b) {
    if (b.max <= b.min) return 0.0;
    return std::clamp((value - b.min) / (b.max - b.min), 0.0, 1.0);
}

void apply_normalization(std::span<NodeMeasures> measures,
                         const NormalizationBounds& bounds) {
    for (NodeMeasures& nm : measures) {
        for (std::size_t i = 0; i < kMeasureCount; ++i) {
            nm.normalized[i] =
                normalize(raw_measure(nm, kAllMeasures[i]), bounds.measure[i]);
        }
        nm.nm = aggregate_nm(nm.normalized);
    }
}

double aggregate_nm(std::span<const double> normalized) {
    double sum = 0.0;
    for (const double v : normalized) sum += v;
    return sum;
}

std::size_t bin_index(double value, double lo, double hi, std::size_t bins) {
    const double scaled = (value - lo) / (hi - lo) * static_cast<double>(bins);
    if (!(scaled > 0.0)) return 0;
    if (scaled >= static_cast<double>(bins)) return bins - 1;
    return static_cast<std::size_t>(scaled);
}

Distribution build_histogram(std::span<const double> values,
                             std::size_t bin_count) {
    if (values.empty()) {
        throw std::invalid_argument("build_histogram: no values");
    }
    if (bin_count == 0) {
        throw std::invalid_argument("build_histogram: bin_count must be >= 1");
    }
    std::vector<std::size_t> counts(bin_count, 0);
    for (const double v : values) {
        ++counts[bin_index(v, 0.0, 1.0, bin_count)];
    }
    Distribution d;
    d.edges.resize(bin_count + 1);
    for (std::size_t k = 0; k <= bin_count; ++k) {
        d.edges[k] = static_cast<double>(k) / static_cast<double>(bin_count);
    }
    d.probs.resize(bin_count);
    const double total = static_cast<double>(values.size());
    for (std::size_t k = 0; k < bin_count; ++k) {
        d.probs[k] = static_cast<double>(counts[k]) / total;
    }
    return d;
}

namespace detail {

double kl_smoothed(std::span<const double> p, std::span<const double> q,
                   double epsilon) {
    const double norm = 1.0 + epsilon * static_cast<double>(p.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const double pk = (p[k] + epsilon) / norm;
        const double qk = (q[k] + epsilon) / norm;
        sum += pk * std::log(pk / qk);
    }
    return sum;
}

} // namespace detail

double kl_divergence(const Distribution& p, const Distribution& q,
                     double epsilon) {
    if (epsilon <= 0.0) {
        throw std::invalid_argument("kl_divergence: epsilon must be > 0");
    }
    if (p.edges != q.edges) {
        throw std::invalid_argument("kl_divergence: mismatched bin edges");
    }
    return detail::kl_smoothed(p.probs, q.probs, epsilon);
}

Evaluation evaluate_sample(
    const std::array<Distribution, kMeasureCount>& reference,
    const std::array<std::vector<double>, kMeasureCount>& sample_values,
    const std::array<double, kMeasureCount>& weights, double epsilon) {
    Evaluation ev;
    ev.weights = weights;
    for (std::size_t i = 0; i < kMeasureCount; ++i) {
        if (weights[i] < 0.0) {
            throw std::invalid_argument("evaluate_sample: negative weight");
        }
        if (sample_values[i].empty()) {
            throw std::invalid_argument("evaluate_sample: empty sample");
        }
        const Distribution sample =
            build_histogram(sample_values[i], reference[i].bins());
        ev.kl[i] = kl_divergence(reference[i], sample, epsilon);
        ev.ev += ev.kl[i] * weights[i];
    }
    return ev;
}

void write_distribution_csv(std::ostream& out, std::string_view measure,
                            const Distribution& d) {
    for (std::size_t k = 0; k < d.bins(); ++k) {
        out << measure << ',' << k << ',' << format_number(d.edges[k]) << ','
            << format_number(d.edges[k + 1]) << ',' << format_number(d.probs[k])
            << '\n';
    }
}

} // namespace mscs
