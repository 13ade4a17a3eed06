#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mscs/cli.hpp"

using namespace mscs;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int status = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli_dispatch(args, out, err);
    return {status, out.str(), err.str()};
}

fs::path write_temp(const std::string& name, const std::string& content) {
    const fs::path dir = fs::temp_directory_path() / "mscs_cli_tests";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream f(p, std::ios::binary);
    f << content;
    return p;
}

} // namespace

TEST_CASE("no arguments prints usage and exits 1") {
    const CliResult r = run_cli({});
    CHECK(r.status == 1);
    CHECK(r.err.find("Usage") != std::string::npos);
}

TEST_CASE("unknown subcommands exit 1") {
    const CliResult r = run_cli({"frobnicate"});
    CHECK(r.status == 1);
}

TEST_CASE("--help exits 0") {
    const CliResult r = run_cli({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("stats") != std::string::npos);
}

TEST_CASE("stats prints the summary measures") {
    const fs::path p = write_temp("three.edges", "1 2\n2 1\n2 3\n");
    const CliResult r = run_cli({"stats", p.string()});
    CHECK(r.status == 0);
    CHECK(r.out.find("nodes 3") != std::string::npos);
    CHECK(r.out.find("edges 3") != std::string::npos);
    CHECK(r.out.find("reciprocal_fraction 0.666667") != std::string::npos);
}

TEST_CASE("stats surfaces load warnings on the diagnostic stream") {
    const fs::path p = write_temp("dups.edges", "1 2\n1 2\n4 4\n");
    const CliResult r = run_cli({"stats", p.string()});
    CHECK(r.status == 0);
    CHECK(r.err.find("1 duplicate edge") != std::string::npos);
    CHECK(r.err.find("1 self-loop") != std::string::npos);
}

TEST_CASE("stats on a missing file exits 2") {
    const CliResult r = run_cli({"stats", "/nonexistent/file.edges"});
    CHECK(r.status == 2);
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("stats can dump the reference distributions") {
    const fs::path p = write_temp("dist.edges", "1 2\n2 3\n3 1\n");
    const fs::path csv =
        fs::temp_directory_path() / "mscs_cli_tests" / "dist.csv";
    const CliResult r = run_cli(
        {"stats", p.string(), "--distributions", csv.string(), "--bins", "5"});
    CHECK(r.status == 0);
    std::ifstream f(csv);
    std::string header;
    std::getline(f, header);
    CHECK(header == "measure,bin,left_edge,right_edge,probability");
    std::size_t rows = 0;
    std::string line;
    while (std::getline(f, line)) ++rows;
    CHECK(rows == 4 * 5);
}

TEST_CASE("generate writes a loadable edge list") {
    const fs::path out =
        fs::temp_directory_path() / "mscs_cli_tests" / "pa.edges";
    const CliResult r = run_cli({"generate", "--generate",
                                 "pa:n=50,m=2,rho=0.5", "--seed", "9", "-o",
                                 out.string()});
    CHECK(r.status == 0);
    const CliResult stats = run_cli({"stats", out.string()});
    CHECK(stats.status == 0);
    CHECK(stats.out.find("nodes 50") != std::string::npos);
}

TEST_CASE("sample emits a trajectory CSV on stdout") {
    const CliResult r = run_cli({"sample", "--generate",
                                 "pa:n=80,m=2,rho=0.75,seed=4", "--strategy",
                                 "kbins", "--target-size", "10",
                                 "--max-stages", "2", "--seed", "5"});
    CHECK(r.status == 0);
    CHECK(r.out.rfind("run_id,strategy,seed,stage,targeted,responded,"
                      "sample_size,sample_fraction,kl_indegree,kl_outdegree,"
                      "kl_degree,kl_clustering,ev\n", 0) == 0);
    CHECK(r.out.find("0,kbins,5,0,") != std::string::npos);
}

TEST_CASE("sample requires a graph source") {
    const CliResult r = run_cli({"sample", "--strategy", "random"});
    CHECK(r.status == 1);
}

TEST_CASE("sample rejects an unknown strategy with a runtime error") {
    const CliResult r = run_cli({"sample", "--generate", "pa:n=30,m=2",
                                 "--strategy", "snowball"});
    CHECK(r.status == 2);
    CHECK(r.err.find("unknown strategy") != std::string::npos);
}

TEST_CASE("experiment with a missing config exits 2") {
    const CliResult r = run_cli({"experiment", "/nonexistent/exp.cfg"});
    CHECK(r.status == 2);
    CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("experiment runs end to end from a config file") {
    const fs::path out = fs::temp_directory_path() / "mscs_cli_tests" / "exp";
    fs::remove_all(out);
    const fs::path cfg = write_temp("exp.cfg",
                                    "generate = pa:n=120,m=2,rho=0.75,seed=2\n"
                                    "strategies = kbins,random\n"
                                    "replications = 2\n"
                                    "seed_base = 50\n"
                                    "fractions = 0.1,0.3\n"
                                    "target_size = 8\n"
                                    "out = " + out.string() + "\n");
    const CliResult r = run_cli({"experiment", cfg.string()});
    CHECK(r.status == 0);
    CHECK(fs::exists(out / "trajectory.csv"));
    CHECK(fs::exists(out / "aggregate.csv"));
    CHECK(fs::exists(out / "plot.gp"));
    CHECK(fs::exists(out / "crossover.txt"));
}
