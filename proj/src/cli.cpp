#include "mscs/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "mscs/controller.hpp"
#include "mscs/csv.hpp"
#include "mscs/experiment.hpp"
#include "mscs/generators.hpp"
#include "mscs/graph.hpp"
#include "mscs/measures.hpp"

namespace mscs {

namespace {

void report_load_warnings(const LoadStats& stats, std::ostream& err) {
    if (stats.self_loops_skipped > 0) {
        err << "warning: skipped " << stats.self_loops_skipped
            << " self-loop(s)\n";
    }
    if (stats.duplicates_skipped > 0) {
        err << "warning: collapsed " << stats.duplicates_skipped
            << " duplicate edge(s)\n";
    }
}

std::array<double, kMeasureCount> parse_weights(const std::string& text) {
    std::array<double, kMeasureCount> w{};
    std::size_t pos = 0;
    for (std::size_t i = 0; i < kMeasureCount; ++i) {
        const std::size_t comma = text.find(',', pos);
        const bool last = i + 1 == kMeasureCount;
        if (last != (comma == std::string::npos)) {
            throw std::invalid_argument(
                "--weights needs exactly 4 comma-separated values");
        }
        const std::string token =
            text.substr(pos, last ? std::string::npos : comma - pos);
        std::size_t used = 0;
        w[i] = std::stod(token, &used);
        if (used != token.size()) {
            throw std::invalid_argument("--weights: bad number '" + token + "'");
        }
        pos = comma + 1;
    }
    return w;
}

struct GraphFlags {
    std::string graph_path;
    std::string generate_spec;

    Graph load(std::ostream& err) const {
        if (!graph_path.empty()) {
            LoadStats stats;
            Graph g = load_edge_list_file(graph_path, &stats);
            report_load_warnings(stats, err);
            return g;
        }
        return generate(parse_generator_spec(generate_spec));
    }
};

void add_graph_flags(CLI::App* cmd, GraphFlags& flags) {
    auto* graph = cmd->add_option("--graph", flags.graph_path,
                                  "edge-list file to load");
    auto* gen = cmd->add_option("--generate", flags.generate_spec,
                                "generator spec, e.g. pa:n=1000,m=5,rho=0.75");
    graph->excludes(gen);
    gen->excludes(graph);
    cmd->callback([&flags, cmd]() {
        if (flags.graph_path.empty() && flags.generate_spec.empty()) {
            throw CLI::RequiredError(cmd->get_name() +
                                     " requires --graph or --generate");
        }
    });
}

int run_stats(const std::string& path, const std::string& dist_file,
              std::size_t bins, std::ostream& out, std::ostream& err) {
    LoadStats stats;
    const Graph g = load_edge_list_file(path, &stats);
    report_load_warnings(stats, err);
    const SummaryStats s = summary_stats(g);
    out << "nodes " << s.node_count << '\n'
        << "edges " << s.edge_count << '\n'
        << "reciprocal_fraction " << format_number(s.reciprocal_fraction) << '\n'
        << "avg_indegree " << format_number(s.avg_indegree) << '\n'
        << "avg_outdegree " << format_number(s.avg_outdegree) << '\n'
        << "avg_degree " << format_number(s.avg_degree) << '\n'
        << "avg_clustering " << format_number(s.avg_clustering) << '\n';
    if (!dist_file.empty()) {
        const NetworkProfile profile = build_network_profile(g, bins);
        std::ofstream df(dist_file, std::ios::binary);
        if (!df) {
            throw std::runtime_error("cannot write " + dist_file);
        }
        df << "measure,bin,left_edge,right_edge,probability\n";
        for (std::size_t i = 0; i < kMeasureCount; ++i) {
            write_distribution_csv(df, measure_name(kAllMeasures[i]),
                                   profile.reference[i]);
        }
    }
    return 0;
}

} // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out,
                 std::ostream& err) {
    CLI::App app{"adaptive network-sampling simulator"};
    app.require_subcommand(1);

    // stats
    auto* stats_cmd =
        app.add_subcommand("stats", "summary measures of an edge-list graph");
    std::string stats_path;
    std::string stats_dist;
    std::size_t stats_bins = 20;
    stats_cmd->add_option("edgelist", stats_path, "edge-list file")->required();
    stats_cmd->add_option("--distributions", stats_dist,
                          "write reference measure distributions to this CSV");
    stats_cmd->add_option("--bins", stats_bins, "histogram bins");

    // generate
    auto* gen_cmd =
        app.add_subcommand("generate", "write a synthetic graph to a file");
    std::string gen_spec;
    std::string gen_out;
    std::optional<std::uint64_t> gen_seed;
    gen_cmd->add_option("--generate", gen_spec, "generator spec")->required();
    gen_cmd->add_option("-o,--output", gen_out, "output edge-list file")
        ->required();
    gen_cmd->add_option("--seed", gen_seed, "override the spec seed");

    // sample
    auto* sample_cmd =
        app.add_subcommand("sample", "one adaptive sampling run");
    GraphFlags sample_graph;
    add_graph_flags(sample_cmd, sample_graph);
    ControllerConfig ctl;
    std::string weights_text;
    std::string sample_out;
    sample_cmd->add_option("--strategy", ctl.strategy,
                           "random | kbins | agg-asc | lowest:<measure>");
    sample_cmd->add_option("--seed", ctl.seed, "run seed");
    sample_cmd->add_option("--rate", ctl.response.rate, "response rate");
    sample_cmd->add_option("--beta", ctl.response.bias_exponent,
                           "degree bias exponent of the response model");
    sample_cmd->add_option("--weights", weights_text,
                           "w1,w2,w3,w4 measure weights");
    sample_cmd->add_option("--bins", ctl.histogram_bins, "histogram bins");
    sample_cmd->add_option("--kbins", ctl.kbins, "stratification bins");
    sample_cmd->add_option("--target-size", ctl.target_size,
                           "targets requested per stage");
    sample_cmd->add_option("--ev-opt", ctl.ev_opt, "termination threshold");
    sample_cmd->add_option("--max-stages", ctl.max_stages, "stage cap");
    sample_cmd->add_option("-o,--output", sample_out,
                           "trajectory CSV file (default: stdout)");

    // experiment
    auto* exp_cmd =
        app.add_subcommand("experiment", "strategy comparison from a config");
    std::string exp_config;
    std::string exp_out;
    exp_cmd->add_option("config", exp_config, "key = value config file")
        ->required();
    exp_cmd->add_option("--out", exp_out, "override the output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return 1;
    }

    try {
        if (app.got_subcommand(stats_cmd)) {
            return run_stats(stats_path, stats_dist, stats_bins, out, err);
        }
        if (app.got_subcommand(gen_cmd)) {
            GeneratorSpec spec = parse_generator_spec(gen_spec);
            if (gen_seed) spec.seed = *gen_seed;
            const Graph g = generate(spec);
            write_edge_list_file(gen_out, g);
            out << "wrote " << gen_out << ": nodes " << g.node_count()
                << " edges " << g.edge_count() << '\n';
            return 0;
        }
        if (app.got_subcommand(sample_cmd)) {
            if (!weights_text.empty()) ctl.weights = parse_weights(weights_text);
            const Graph g = sample_graph.load(err);
            const std::vector<StageRecord> records = run_mscs(g, ctl);
            const RunInfo run{0, ctl.strategy, ctl.seed};
            const auto write_all = [&](std::ostream& o) {
                write_trajectory_header(o);
                for (const StageRecord& rec : records) {
                    write_trajectory_row(o, run, rec);
                }
            };
            if (sample_out.empty()) {
                write_all(out);
            } else {
                std::ofstream f(sample_out, std::ios::binary);
                if (!f) throw std::runtime_error("cannot write " + sample_out);
                write_all(f);
            }
            return 0;
        }
        // experiment
        ExperimentConfig cfg = load_experiment_config(exp_config);
        if (!exp_out.empty()) cfg.out_dir = exp_out;
        const ExperimentResult result = run_experiment(cfg);
        out << "trajectory: " << result.trajectory_csv.string() << '\n'
            << "aggregate:  " << result.aggregate_csv.string() << '\n'
            << "plot:       " << result.plot_script.string() << '\n'
            << "crossover:  " << result.crossover_report.string() << '\n';
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("mscs");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace mscs
