#include "mscs/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

namespace mscs {

namespace {

std::size_t lower_bound_index(const std::vector<NodeId>& ids, NodeId id) {
    return static_cast<std::size_t>(
        std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
}

} // namespace

Graph Graph::build(std::vector<NodeId> nodes,
                   std::vector<std::pair<NodeId, NodeId>> edges,
                   LoadStats* stats) {
    Graph g;
    g.ids_ = std::move(nodes);
    g.ids_.reserve(g.ids_.size() + 2 * edges.size());
    for (const auto& [src, dst] : edges) {
        g.ids_.push_back(src);
        g.ids_.push_back(dst);
    }
    std::sort(g.ids_.begin(), g.ids_.end());
    g.ids_.erase(std::unique(g.ids_.begin(), g.ids_.end()), g.ids_.end());

    const std::size_t n = g.ids_.size();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> dense;
    dense.reserve(edges.size());
    std::size_t self_loops = 0;
    for (const auto& [src, dst] : edges) {
        if (src == dst) {
            ++self_loops;
            continue;
        }
        dense.emplace_back(
            static_cast<std::uint32_t>(lower_bound_index(g.ids_, src)),
            static_cast<std::uint32_t>(lower_bound_index(g.ids_, dst)));
    }
    std::sort(dense.begin(), dense.end());
    const std::size_t before = dense.size();
    dense.erase(std::unique(dense.begin(), dense.end()), dense.end());
    if (stats != nullptr) {
        stats->self_loops_skipped = self_loops;
        stats->duplicates_skipped = before - dense.size();
    }
    g.edge_count_ = dense.size();

    g.out_offsets_.assign(n + 1, 0);
    g.in_offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : dense) {
        ++g.out_offsets_[u + 1];
        ++g.in_offsets_[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
        g.out_offsets_[i + 1] += g.out_offsets_[i];
        g.in_offsets_[i + 1] += g.in_offsets_[i];
    }
    g.out_adj_.resize(dense.size());
    g.in_adj_.resize(dense.size());
    std::vector<std::size_t> out_fill(g.out_offsets_.begin(),
                                      g.out_offsets_.end() - 1);
    std::vector<std::size_t> in_fill(g.in_offsets_.begin(),
                                     g.in_offsets_.end() - 1);
    for (const auto& [u, v] : dense) { // dense is sorted, so rows stay sorted
        g.out_adj_[out_fill[u]++] = v;
        g.in_adj_[in_fill[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto first = g.in_adj_.begin() + static_cast<std::ptrdiff_t>(g.in_offsets_[v]);
        auto last = g.in_adj_.begin() + static_cast<std::ptrdiff_t>(g.in_offsets_[v + 1]);
        std::sort(first, last);
    }
    return g;
}

bool Graph::has_node(NodeId id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

std::size_t Graph::index_of(NodeId id) const {
    const std::size_t i = lower_bound_index(ids_, id);
    if (i == ids_.size() || ids_[i] != id) {
        throw std::out_of_range("unknown node id " + std::to_string(id));
    }
    return i;
}

std::span<const std::uint32_t> Graph::out_neighbors(std::size_t index) const {
    return {out_adj_.data() + out_offsets_[index],
            out_offsets_[index + 1] - out_offsets_[index]};
}

std::span<const std::uint32_t> Graph::in_neighbors(std::size_t index) const {
    return {in_adj_.data() + in_offsets_[index],
            in_offsets_[index + 1] - in_offsets_[index]};
}

bool Graph::has_edge(std::size_t from, std::size_t to) const {
    const auto nbrs = out_neighbors(from);
    return std::binary_search(nbrs.begin(), nbrs.end(),
                              static_cast<std::uint32_t>(to));
}

std::size_t Graph::indegree(std::size_t index) const {
    return in_offsets_[index + 1] - in_offsets_[index];
}

std::size_t Graph::outdegree(std::size_t index) const {
    return out_offsets_[index + 1] - out_offsets_[index];
}

std::size_t Graph::degree(std::size_t index) const {
    return indegree(index) + outdegree(index);
}

namespace {

NodeId parse_node_id(std::string_view token, std::size_t line_no) {
    if (!token.empty() && token.front() == '-') {
        throw ParseError("edge list line " + std::to_string(line_no) +
                         ": negative node id '" + std::string(token) + "'");
    }
    NodeId value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("edge list line " + std::to_string(line_no) +
                         ": malformed token '" + std::string(token) + "'");
    }
    return value;
}

} // namespace

Graph load_edge_list(std::string_view text, LoadStats* stats) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        std::string cleaned(line);
        std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
        std::replace(cleaned.begin(), cleaned.end(), '\r', ' ');
        std::string_view rest(cleaned);

        std::vector<std::string_view> tokens;
        while (!rest.empty()) {
            const std::size_t start = rest.find_first_not_of(" \t");
            if (start == std::string_view::npos) break;
            rest.remove_prefix(start);
            const std::size_t len = std::min(rest.find_first_of(" \t"), rest.size());
            tokens.push_back(rest.substr(0, len));
            rest.remove_prefix(len);
        }
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() != 2) {
            throw ParseError("edge list line " + std::to_string(line_no) +
                             ": expected two node ids, got " +
                             std::to_string(tokens.size()) + " tokens");
        }
        edges.emplace_back(parse_node_id(tokens[0], line_no),
                           parse_node_id(tokens[1], line_no));
    }
    return Graph::build({}, std::move(edges), stats);
}

Graph load_edge_list_file(const std::filesystem::path& path, LoadStats* stats) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open edge list file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_edge_list(buf.str(), stats);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# nodes " << g.node_count() << " edges " << g.edge_count() << '\n';
    for (std::size_t u = 0; u < g.node_count(); ++u) {
        for (const std::uint32_t v : g.out_neighbors(u)) {
            out << g.id_at(u) << ' ' << g.id_at(v) << '\n';
        }
    }
}

void write_edge_list_file(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write edge list file: " + path.string());
    }
    write_edge_list(out, g);
}

} // namespace mscs
