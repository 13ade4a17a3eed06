#include "mscs/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mscs/csv.hpp"

namespace mscs {

namespace {

std::string_view trim(std::string_view s) {
    const std::size_t first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const std::size_t last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t next = std::min(s.find(sep, pos), s.size());
        out.push_back(trim(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

double to_real(std::string_view text, std::string_view key) {
    double v = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("experiment config: bad number for '" +
                                    std::string(key) + "'");
    }
    return v;
}

std::uint64_t to_integer(std::string_view text, std::string_view key) {
    std::uint64_t v = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("experiment config: bad integer for '" +
                                    std::string(key) + "'");
    }
    return v;
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.graph_path.empty() == !cfg.generator.has_value()) {
        throw std::invalid_argument(
            "experiment config: exactly one of 'graph' and 'generate' required");
    }
    if (cfg.strategies.empty()) {
        throw std::invalid_argument("experiment config: no strategies");
    }
    for (const std::string& s : cfg.strategies) parse_strategy(s);
    if (!cfg.initial_strategy.empty()) parse_strategy(cfg.initial_strategy);
    if (cfg.replications < 1) {
        throw std::invalid_argument("experiment config: replications must be >= 1");
    }
    if (cfg.fractions.empty()) {
        throw std::invalid_argument("experiment config: no fractions");
    }
    double prev = 0.0;
    for (const double f : cfg.fractions) {
        if (!(f > prev && f <= 1.0)) {
            throw std::invalid_argument(
                "experiment config: fractions must ascend within (0, 1]");
        }
        prev = f;
    }
    if (cfg.out_dir.empty()) {
        throw std::invalid_argument("experiment config: 'out' directory required");
    }
}

ControllerConfig controller_config(const ExperimentConfig& cfg,
                                   const std::string& strategy,
                                   std::uint64_t seed, std::size_t node_count) {
    ControllerConfig c;
    c.strategy = strategy;
    c.initial_strategy =
        cfg.initial_strategy.empty() ? strategy : cfg.initial_strategy;
    c.ev_opt = 0.0;
    c.target_size = cfg.target_size;
    c.weights = cfg.weights;
    c.histogram_bins = cfg.histogram_bins;
    c.kbins = cfg.kbins;
    c.epsilon = cfg.epsilon;
    c.seed = seed;
    c.response = {cfg.rate, cfg.beta};
    // Enough stages to push the sample past the largest checkpoint, with
    // slack for sub-unit response rates; the pool-exhaustion stop still
    // bounds the loop.
    const double largest = cfg.fractions.back();
    const double per_stage = static_cast<double>(cfg.target_size) *
                             std::max(cfg.rate, 0.05);
    const double needed =
        largest * static_cast<double>(node_count) / std::max(per_stage, 1.0);
    c.max_stages = static_cast<std::size_t>(std::ceil(needed * 1.25)) + 4;
    return c;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write output file: " + path.string());
    }
    return out;
}

} // namespace

ExperimentConfig parse_experiment_config(std::string_view text) {
    ExperimentConfig cfg;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        const std::string_view line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("experiment config line " +
                                        std::to_string(line_no) +
                                        ": expected key = value");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key == "graph") {
            cfg.graph_path = std::string(value);
        } else if (key == "generate") {
            cfg.generator = parse_generator_spec(value);
        } else if (key == "strategies") {
            for (const auto s : split(value, ',')) {
                if (!s.empty()) cfg.strategies.emplace_back(s);
            }
        } else if (key == "initial_strategy") {
            cfg.initial_strategy = std::string(value);
        } else if (key == "replications") {
            cfg.replications = to_integer(value, key);
        } else if (key == "seed_base") {
            cfg.seed_base = to_integer(value, key);
        } else if (key == "fractions") {
            for (const auto f : split(value, ',')) {
                if (!f.empty()) cfg.fractions.push_back(to_real(f, key));
            }
        } else if (key == "target_size") {
            cfg.target_size = to_integer(value, key);
        } else if (key == "rate") {
            cfg.rate = to_real(value, key);
        } else if (key == "beta") {
            cfg.beta = to_real(value, key);
        } else if (key == "weights") {
            const auto parts = split(value, ',');
            if (parts.size() != kMeasureCount) {
                throw std::invalid_argument(
                    "experiment config: weights needs 4 comma-separated values");
            }
            for (std::size_t i = 0; i < kMeasureCount; ++i) {
                cfg.weights[i] = to_real(parts[i], key);
            }
        } else if (key == "bins") {
            cfg.histogram_bins = to_integer(value, key);
        } else if (key == "kbins") {
            cfg.kbins = to_integer(value, key);
        } else if (key == "epsilon") {
            cfg.epsilon = to_real(value, key);
        } else if (key == "out") {
            cfg.out_dir = std::string(value);
        } else {
            throw std::invalid_argument("experiment config line " +
                                        std::to_string(line_no) +
                                        ": unknown key '" + std::string(key) +
                                        "'");
        }
    }
    return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open experiment config: " +
                                 path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_experiment_config(buf.str());
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    validate(cfg);

    std::filesystem::create_directories(cfg.out_dir);
    ExperimentResult result;
    result.trajectory_csv = cfg.out_dir / "trajectory.csv";
    result.aggregate_csv = cfg.out_dir / "aggregate.csv";
    result.plot_script = cfg.out_dir / "plot.gp";
    result.crossover_report = cfg.out_dir / "crossover.txt";
    std::ofstream trajectory = open_out(result.trajectory_csv); // fail early

    const Graph g = cfg.generator ? generate(*cfg.generator)
                                  : load_edge_list_file(cfg.graph_path);
    const NetworkProfile profile =
        build_network_profile(g, cfg.histogram_bins);

    write_trajectory_header(trajectory);
    for (const std::string& strategy : cfg.strategies) {
        for (std::size_t rep = 0; rep < cfg.replications; ++rep) {
            const std::uint64_t seed = cfg.seed_base + rep;
            std::vector<StageRecord> records;
            try {
                records = run_mscs(
                    g, profile, controller_config(cfg, strategy, seed,
                                                  g.node_count()));
            } catch (const std::exception& e) {
                throw std::runtime_error("experiment run failed (strategy " +
                                         strategy + ", seed " +
                                         std::to_string(seed) +
                                         "): " + e.what());
            }
            const RunInfo run{rep, strategy, seed};
            for (const StageRecord& rec : records) {
                write_trajectory_row(trajectory, run, rec);
            }

            RunCheckpoints cp{strategy, rep, seed, {}};
            for (const double f : cfg.fractions) {
                const auto hit = std::find_if(
                    records.begin(), records.end(),
                    [f](const StageRecord& r) { return r.sample_fraction >= f; });
                if (hit == records.end()) {
                    throw std::runtime_error(
                        "experiment run never reached fraction " +
                        format_number(f) + " (strategy " + strategy +
                        ", seed " + std::to_string(seed) + ")");
                }
                // Round through the CSV format so aggregates stay a pure
                // function of the written trajectory rows.
                cp.ev.push_back(
                    std::strtod(format_number(hit->ev).c_str(), nullptr));
            }
            result.runs.push_back(std::move(cp));
        }
    }
    trajectory.close();

    for (const std::string& strategy : cfg.strategies) {
        for (std::size_t fi = 0; fi < cfg.fractions.size(); ++fi) {
            double sum = 0.0;
            for (const RunCheckpoints& cp : result.runs) {
                if (cp.strategy == strategy) sum += cp.ev[fi];
            }
            const double n = static_cast<double>(cfg.replications);
            const double mean = sum / n;
            double sq = 0.0;
            for (const RunCheckpoints& cp : result.runs) {
                if (cp.strategy == strategy) {
                    sq += (cp.ev[fi] - mean) * (cp.ev[fi] - mean);
                }
            }
            const double sd =
                cfg.replications > 1 ? std::sqrt(sq / (n - 1.0)) : 0.0;
            result.aggregate.push_back(
                {strategy, cfg.fractions[fi], mean, sd});
        }
    }

    std::ofstream agg = open_out(result.aggregate_csv);
    agg << "strategy,fraction,mean_ev,std_ev\n";
    for (const AggregateRow& row : result.aggregate) {
        agg << row.strategy << ',' << format_number(row.fraction) << ','
            << format_number(row.mean_ev) << ',' << format_number(row.std_ev)
            << '\n';
    }
    agg.close();

    std::ofstream plot = open_out(result.plot_script);
    plot << "# gnuplot script: mean ev vs sample fraction per strategy\n"
         << "set xlabel 'sample fraction'\n"
         << "set ylabel 'mean EV'\n"
         << "set key top right\n"
         << "set grid\n"
         << "plot";
    for (std::size_t i = 0; i < cfg.strategies.size(); ++i) {
        plot << (i == 0 ? " " : ", ") << "'-' using 1:2:3 with yerrorlines title '"
             << cfg.strategies[i] << "'";
    }
    plot << '\n';
    for (const std::string& strategy : cfg.strategies) {
        for (const AggregateRow& row : result.aggregate) {
            if (row.strategy != strategy) continue;
            plot << format_number(row.fraction) << ' '
                 << format_number(row.mean_ev) << ' '
                 << format_number(row.std_ev) << '\n';
        }
        plot << "e\n";
    }
    plot.close();

    // Where (if anywhere) random sampling first matches or beats another
    // strategy on mean ev.
    std::ofstream cross = open_out(result.crossover_report);
    const bool has_random =
        std::find(cfg.strategies.begin(), cfg.strategies.end(), "random") !=
        cfg.strategies.end();
    const auto mean_of = [&](const std::string& strategy, std::size_t fi) {
        for (const AggregateRow& row : result.aggregate) {
            if (row.strategy == strategy && row.fraction == cfg.fractions[fi]) {
                return row.mean_ev;
            }
        }
        throw std::logic_error("aggregate row missing");
    };
    for (const std::string& strategy : cfg.strategies) {
        if (strategy == "random" || !has_random) continue;
        std::optional<double> crossover;
        for (std::size_t fi = 0; fi < cfg.fractions.size(); ++fi) {
            if (mean_of("random", fi) <= mean_of(strategy, fi)) {
                crossover = cfg.fractions[fi];
                break;
            }
        }
        cross << "crossover " << strategy << " vs random: ";
        if (crossover) {
            cross << "mean ev(random) <= mean ev(" << strategy
                  << ") from fraction " << format_number(*crossover) << '\n';
        } else {
            cross << "none within swept fractions\n";
        }
    }
    if (!has_random) {
        cross << "no random baseline in this experiment\n";
    }
    cross.close();
    return result;
}

} // namespace mscs
