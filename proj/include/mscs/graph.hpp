#ifndef MSCS_GRAPH_HPP
#define MSCS_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace mscs {

using NodeId = std::uint64_t;

// Raised on malformed edge-list input; the message names the line number.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Counts of input lines dropped while building a simple graph.
struct LoadStats {
    std::size_t self_loops_skipped = 0;
    std::size_t duplicates_skipped = 0;
};

// Immutable directed simple graph. Node ids are arbitrary non-negative
// integers; internally nodes are re-indexed densely (0..n-1, ascending id
// order) and adjacency is stored as sorted CSR arrays. Safe to share across
// threads once built.
class Graph {
public:
    Graph() = default;

    // Nodes may repeat and edges may reference unlisted ids; the node set is
    // the union of both. Self-loops are dropped and duplicate directed edges
    // collapsed, counted into `stats` when given.
    static Graph build(std::vector<NodeId> nodes,
                       std::vector<std::pair<NodeId, NodeId>> edges,
                       LoadStats* stats = nullptr);

    std::size_t node_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    std::span<const NodeId> node_ids() const { return ids_; }

    bool has_node(NodeId id) const;
    // Dense index of a node id; throws std::out_of_range for unknown ids.
    std::size_t index_of(NodeId id) const;
    NodeId id_at(std::size_t index) const { return ids_[index]; }

    std::span<const std::uint32_t> out_neighbors(std::size_t index) const;
    std::span<const std::uint32_t> in_neighbors(std::size_t index) const;
    bool has_edge(std::size_t from, std::size_t to) const;

    std::size_t indegree(std::size_t index) const;
    std::size_t outdegree(std::size_t index) const;
    std::size_t degree(std::size_t index) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<NodeId> ids_;            // ascending
    std::vector<std::size_t> out_offsets_;
    std::vector<std::uint32_t> out_adj_; // sorted per node
    std::vector<std::size_t> in_offsets_;
    std::vector<std::uint32_t> in_adj_;  // sorted per node
    std::size_t edge_count_ = 0;
};

// Parses "src dst" lines (whitespace or comma separated, '#' starts a
// comment line). Empty input gives an empty graph.
Graph load_edge_list(std::string_view text, LoadStats* stats = nullptr);
Graph load_edge_list_file(const std::filesystem::path& path,
                          LoadStats* stats = nullptr);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::filesystem::path& path, const Graph& g);

} // namespace mscs

#endif
