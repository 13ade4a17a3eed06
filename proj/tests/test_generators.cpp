#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "mscs/generators.hpp"
#include "mscs/measures.hpp"

using namespace mscs;

namespace {

GeneratorSpec pa_spec(std::size_t n, std::size_t m, double rho,
                      std::uint64_t seed) {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::PreferentialAttachment;
    spec.n = n;
    spec.m = m;
    spec.reciprocity = rho;
    spec.seed = seed;
    return spec;
}

GeneratorSpec uniform_spec(std::size_t n, double p, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::UniformRandom;
    spec.n = n;
    spec.p = p;
    spec.seed = seed;
    return spec;
}

std::size_t max_degree(const Graph& g) {
    std::size_t best = 0;
    for (std::size_t u = 0; u < g.node_count(); ++u) {
        best = std::max(best, g.degree(u));
    }
    return best;
}

} // namespace

TEST_CASE("pa with n == m+1 is just the seed clique") {
    const Graph g = generate_preferential_attachment(pa_spec(6, 5, 0.0, 1));
    CHECK(g.node_count() == 6);
    CHECK(g.edge_count() == 15); // one direction per pair
    const Graph full = generate_preferential_attachment(pa_spec(6, 5, 1.0, 1));
    CHECK(full.edge_count() == 30); // every pair reciprocated
}

TEST_CASE("pa edge count is exact without reciprocation") {
    const Graph g = generate_preferential_attachment(pa_spec(1000, 5, 0.0, 2));
    CHECK(g.node_count() == 1000);
    CHECK(g.edge_count() == 15 + 5 * 994); // 4985
}

TEST_CASE("pa is deterministic per seed") {
    const auto spec = pa_spec(300, 3, 0.75, 7);
    CHECK(generate_preferential_attachment(spec) ==
          generate_preferential_attachment(spec));
    auto other = spec;
    other.seed = 8;
    CHECK(!(generate_preferential_attachment(spec) ==
            generate_preferential_attachment(other)));
}

TEST_CASE("pa concentrates degree in its oldest nodes") {
    const Graph g =
        generate_preferential_attachment(pa_spec(10000, 5, 0.75, 1));
    std::vector<std::size_t> degrees(g.node_count());
    for (std::size_t u = 0; u < g.node_count(); ++u) degrees[u] = g.degree(u);
    std::sort(degrees.begin(), degrees.end());
    const double median = static_cast<double>(degrees[degrees.size() / 2]);
    // Mean degree over the top 1%.
    double top = 0.0;
    const std::size_t k = degrees.size() / 100;
    for (std::size_t i = degrees.size() - k; i < degrees.size(); ++i) {
        top += static_cast<double>(degrees[i]);
    }
    top /= static_cast<double>(k);
    CHECK(top >= 10.0 * median);
}

TEST_CASE("pa rejects m >= n") {
    CHECK_THROWS_AS(generate_preferential_attachment(pa_spec(5, 5, 0.0, 1)),
                    std::invalid_argument);
}

TEST_CASE("uniform endpoints: empty and complete") {
    const Graph none = generate_uniform_random(uniform_spec(50, 0.0, 1));
    CHECK(none.node_count() == 50); // isolated nodes survive generation
    CHECK(none.edge_count() == 0);
    const Graph full = generate_uniform_random(uniform_spec(20, 1.0, 1));
    CHECK(full.edge_count() == 20 * 19);
}

TEST_CASE("uniform edge count concentrates around n(n-1)p") {
    // mean 9990, sigma ~99.4
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Graph g = generate_uniform_random(uniform_spec(1000, 0.01, seed));
        const double e = static_cast<double>(g.edge_count());
        CHECK(std::abs(e - 9990.0) <= 3.0 * 99.45);
    }
}

TEST_CASE("uniform is deterministic per seed") {
    const auto spec = uniform_spec(200, 0.05, 11);
    CHECK(generate_uniform_random(spec) == generate_uniform_random(spec));
}

TEST_CASE("pa tails are heavier than equal-density uniform tails") {
    int pa_wins = 0;
    const int pairs = 30;
    for (int s = 0; s < pairs; ++s) {
        const Graph pa = generate_preferential_attachment(
            pa_spec(10000, 5, 0.75, 400 + static_cast<std::uint64_t>(s)));
        const double density =
            static_cast<double>(pa.edge_count()) / (10000.0 * 9999.0);
        const Graph uni = generate_uniform_random(
            uniform_spec(10000, density, 400 + static_cast<std::uint64_t>(s)));
        if (max_degree(pa) > max_degree(uni)) ++pa_wins;
    }
    CHECK(pa_wins >= 28);
}

TEST_CASE("generator specs parse and validate") {
    const GeneratorSpec pa = parse_generator_spec("pa:n=100,m=4,rho=0.5,seed=3");
    CHECK(pa.kind == GeneratorSpec::Kind::PreferentialAttachment);
    CHECK(pa.n == 100);
    CHECK(pa.m == 4);
    CHECK(pa.reciprocity == 0.5);
    CHECK(pa.seed == 3);

    const GeneratorSpec uni = parse_generator_spec("uniform:n=50,p=0.1");
    CHECK(uni.kind == GeneratorSpec::Kind::UniformRandom);
    CHECK(uni.p == 0.1);

    CHECK_THROWS_AS(parse_generator_spec("smallworld:n=10"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_generator_spec("pa:n=10,m=10"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_generator_spec("pa:n=10,m=2,rho=1.5"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_generator_spec("uniform:n=10,p=2"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_generator_spec("pa"), std::invalid_argument);
    CHECK_THROWS_AS(parse_generator_spec("pa:n=ten"), std::invalid_argument);
}

TEST_CASE("generated graphs satisfy simple-graph invariants") {
    const Graph pa = generate_preferential_attachment(pa_spec(500, 4, 0.6, 9));
    std::size_t in_sum = 0;
    for (std::size_t u = 0; u < pa.node_count(); ++u) {
        in_sum += pa.indegree(u);
        CHECK(!pa.has_edge(u, u));
    }
    CHECK(in_sum == pa.edge_count());
}
