#ifndef MSCS_EXPERIMENT_HPP
#define MSCS_EXPERIMENT_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mscs/controller.hpp"
#include "mscs/generators.hpp"

namespace mscs {

// A strategy-comparison experiment: every strategy runs `replications`
// times with paired seeds (replication j uses seed_base + j for every
// strategy) and ev is sampled at the first stage reaching each checkpoint
// fraction.
struct ExperimentConfig {
    std::string graph_path;                    // exclusive with generator
    std::optional<GeneratorSpec> generator;
    std::vector<std::string> strategies;
    // Stage-0 selection for every run; empty means each run's own strategy,
    // so compared strategies act from the very first stage.
    std::string initial_strategy;
    std::size_t replications = 1;
    std::uint64_t seed_base = 0;
    std::vector<double> fractions;             // ascending, in (0, 1]
    std::size_t target_size = 10;
    double rate = 1.0;
    double beta = 0.0;
    std::array<double, kMeasureCount> weights = {1.0, 1.0, 1.0, 1.0};
    std::size_t histogram_bins = 20;
    std::size_t kbins = 20;
    double epsilon = 1e-6;
    std::filesystem::path out_dir;
};

// Flat "key = value" file, '#' comments. Unknown keys are errors.
ExperimentConfig load_experiment_config(const std::filesystem::path& path);
ExperimentConfig parse_experiment_config(std::string_view text);

struct AggregateRow {
    std::string strategy;
    double fraction = 0.0;
    double mean_ev = 0.0;
    double std_ev = 0.0; // sample standard deviation (n-1); 0 for one run
};

struct RunCheckpoints {
    std::string strategy;
    std::size_t replication = 0;
    std::uint64_t seed = 0;
    std::vector<double> ev; // one per checkpoint fraction
};

struct ExperimentResult {
    std::filesystem::path trajectory_csv;
    std::filesystem::path aggregate_csv;
    std::filesystem::path plot_script;
    std::filesystem::path crossover_report;
    std::vector<AggregateRow> aggregate;
    std::vector<RunCheckpoints> runs;
};

// Runs the comparison and writes trajectory.csv, aggregate.csv, plot.gp and
// crossover.txt into the output directory. Any replication failure aborts
// with a message naming the strategy and seed.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

} // namespace mscs

#endif
