#include "mscs/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "mscs/rng.hpp"

namespace mscs {

namespace {

double parse_real(std::string_view text, std::string_view key) {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("generator spec: bad value for '" +
                                    std::string(key) + "'");
    }
    return value;
}

std::uint64_t parse_integer(std::string_view text, std::string_view key) {
    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("generator spec: bad value for '" +
                                    std::string(key) + "'");
    }
    return value;
}

void validate(const GeneratorSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("generator spec: n must be >= 1");
    if (spec.reciprocity < 0.0 || spec.reciprocity > 1.0) {
        throw std::invalid_argument("generator spec: rho must be in [0, 1]");
    }
    if (spec.kind == GeneratorSpec::Kind::PreferentialAttachment) {
        if (spec.m < 1 || spec.m >= spec.n) {
            throw std::invalid_argument(
                "generator spec: pa requires 1 <= m < n");
        }
    } else {
        if (spec.p < 0.0 || spec.p > 1.0) {
            throw std::invalid_argument("generator spec: p must be in [0, 1]");
        }
    }
}

} // namespace

GeneratorSpec parse_generator_spec(std::string_view text) {
    GeneratorSpec spec;
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument(
            "generator spec: expected '<kind>:key=value,...'");
    }
    const std::string_view kind = text.substr(0, colon);
    if (kind == "pa") {
        spec.kind = GeneratorSpec::Kind::PreferentialAttachment;
    } else if (kind == "uniform") {
        spec.kind = GeneratorSpec::Kind::UniformRandom;
    } else {
        throw std::invalid_argument("generator spec: unknown kind '" +
                                    std::string(kind) + "'");
    }

    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        const std::size_t comma = std::min(rest.find(','), rest.size());
        const std::string_view item = rest.substr(0, comma);
        rest.remove_prefix(std::min(comma + 1, rest.size()));
        if (item.empty()) continue;
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("generator spec: expected key=value, got '" +
                                        std::string(item) + "'");
        }
        const std::string_view key = item.substr(0, eq);
        const std::string_view value = item.substr(eq + 1);
        if (key == "n") {
            spec.n = parse_integer(value, key);
        } else if (key == "m") {
            spec.m = parse_integer(value, key);
        } else if (key == "p") {
            spec.p = parse_real(value, key);
        } else if (key == "rho") {
            spec.reciprocity = parse_real(value, key);
        } else if (key == "seed") {
            spec.seed = parse_integer(value, key);
        } else {
            throw std::invalid_argument("generator spec: unknown key '" +
                                        std::string(key) + "'");
        }
    }
    validate(spec);
    return spec;
}

std::string generator_spec_name(const GeneratorSpec& spec) {
    std::string out;
    if (spec.kind == GeneratorSpec::Kind::PreferentialAttachment) {
        out = "pa:n=" + std::to_string(spec.n) + ",m=" + std::to_string(spec.m);
    } else {
        out = "uniform:n=" + std::to_string(spec.n) +
              ",p=" + std::to_string(spec.p);
    }
    out += ",rho=" + std::to_string(spec.reciprocity) +
           ",seed=" + std::to_string(spec.seed);
    return out;
}

Graph generate_preferential_attachment(const GeneratorSpec& spec) {
    validate(spec);
    Rng rng(spec.seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    // One urn entry per unit of total degree; sampling an entry is sampling
    // a node proportional to degree.
    std::vector<std::uint32_t> urn;
    const std::size_t clique = spec.m + 1;
    edges.reserve(clique * (clique - 1) / 2 + spec.m * (spec.n - clique));

    const auto add_link = [&](std::uint32_t src, std::uint32_t dst) {
        edges.emplace_back(src, dst);
        urn.push_back(src);
        urn.push_back(dst);
        if (rng.next_bernoulli(spec.reciprocity)) {
            edges.emplace_back(dst, src);
            urn.push_back(src);
            urn.push_back(dst);
        }
    };

    for (std::uint32_t i = 0; i < clique; ++i) {
        for (std::uint32_t j = i + 1; j < clique; ++j) add_link(i, j);
    }

    std::vector<std::uint32_t> targets;
    for (std::uint32_t v = static_cast<std::uint32_t>(clique); v < spec.n; ++v) {
        targets.clear();
        const std::size_t urn_size = urn.size(); // snapshot before v's edges
        while (targets.size() < spec.m) {
            const std::uint32_t candidate =
                urn[static_cast<std::size_t>(rng.next_below(urn_size))];
            if (std::find(targets.begin(), targets.end(), candidate) ==
                targets.end()) {
                targets.push_back(candidate);
            }
        }
        for (const std::uint32_t t : targets) add_link(v, t);
    }

    std::vector<NodeId> nodes(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) nodes[i] = i;
    return Graph::build(std::move(nodes), std::move(edges));
}

Graph generate_uniform_random(const GeneratorSpec& spec) {
    validate(spec);
    std::vector<std::pair<NodeId, NodeId>> edges;
    const std::uint64_t n = spec.n;
    const std::uint64_t pairs = n * (n - 1);
    if (spec.p >= 1.0) {
        edges.reserve(pairs);
        for (std::uint64_t i = 0; i < n; ++i) {
            for (std::uint64_t j = 0; j < n; ++j) {
                if (i != j) edges.emplace_back(i, j);
            }
        }
    } else if (spec.p > 0.0) {
        // Geometric jumps between successive edges instead of one Bernoulli
        // draw per ordered pair; O(edges) regardless of n.
        Rng rng(spec.seed);
        const double log1mp = std::log1p(-spec.p);
        std::uint64_t idx = 0;
        for (;;) {
            const double u = rng.next_unit();
            const double skip = std::floor(std::log1p(-u) / log1mp);
            idx += static_cast<std::uint64_t>(skip);
            if (idx >= pairs) break;
            const std::uint64_t i = idx / (n - 1);
            const std::uint64_t r = idx % (n - 1);
            const std::uint64_t j = r + (r >= i ? 1 : 0);
            edges.emplace_back(i, j);
            ++idx;
        }
    }
    std::vector<NodeId> nodes(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) nodes[i] = i;
    return Graph::build(std::move(nodes), std::move(edges));
}

Graph generate(const GeneratorSpec& spec) {
    return spec.kind == GeneratorSpec::Kind::PreferentialAttachment
               ? generate_preferential_attachment(spec)
               : generate_uniform_random(spec);
}

} // namespace mscs
