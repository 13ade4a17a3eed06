#ifndef MSCS_GENERATORS_HPP
#define MSCS_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "mscs/graph.hpp"

namespace mscs {

// Synthetic network recipe. Parsed from strings like
//   "pa:n=10000,m=5,rho=0.75,seed=1"
//   "uniform:n=1000,p=0.01,seed=2"
struct GeneratorSpec {
    enum class Kind { PreferentialAttachment, UniformRandom };

    Kind kind = Kind::PreferentialAttachment;
    std::size_t n = 0;        // node count
    std::size_t m = 1;        // out-edges per new node (PA)
    double p = 0.0;           // edge probability (uniform)
    double reciprocity = 0.75; // chance each PA link gains a reverse edge
    std::uint64_t seed = 0;
};

GeneratorSpec parse_generator_spec(std::string_view text);
std::string generator_spec_name(const GeneratorSpec& spec);

// Directed preferential attachment: a seed clique of m+1 nodes, then each
// new node sends m out-edges to distinct existing nodes chosen proportional
// to current total degree; every link is independently reciprocated with
// probability `reciprocity`. Deterministic per seed.
Graph generate_preferential_attachment(const GeneratorSpec& spec);

// Each ordered pair (i, j), i != j, is an edge independently with
// probability p. Deterministic per seed.
Graph generate_uniform_random(const GeneratorSpec& spec);

Graph generate(const GeneratorSpec& spec);

} // namespace mscs

#endif
