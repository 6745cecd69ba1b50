#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace modepoly {

// Node identifiers are indices into the graph's canonical (declaration) order.
using NodeIndex = std::size_t;
// Sorted, duplicate-free list of node indices.
using NodeSet = std::vector<NodeIndex>;

// Finite simple undirected graph with string-labelled nodes. Immutable after
// construction. Adjacency lists are sorted by canonical node order.
class Graph {
public:
    Graph() = default;

    // Throws InvalidInput on duplicate labels, unknown endpoints, loops or
    // repeated edges.
    Graph(std::vector<std::string> nodes,
          const std::vector<std::pair<std::string, std::string>>& edges);

    // Index-based construction for generators and derived graphs.
    static Graph from_indices(std::vector<std::string> nodes,
                              const std::vector<std::pair<NodeIndex, NodeIndex>>& edges);

    std::size_t size() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(NodeIndex v) const { return labels_.at(v); }

    // Throws InvalidInput for unknown labels.
    NodeIndex index_of(std::string_view label) const;
    bool contains(std::string_view label) const;

    std::span<const NodeIndex> neighbors(NodeIndex v) const { return adjacency_.at(v); }
    std::size_t degree(NodeIndex v) const { return adjacency_.at(v).size(); }
    bool adjacent(NodeIndex a, NodeIndex b) const;
    bool isolated(NodeIndex v) const { return adjacency_.at(v).empty(); }

    // Edges as label pairs, lexicographically smaller label first, sorted.
    std::vector<std::pair<std::string, std::string>> edges() const;
    // Edges as index pairs (a < b), sorted.
    std::vector<std::pair<NodeIndex, NodeIndex>> index_edges() const;

    NodeSet indices_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(std::span<const NodeIndex> set) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeIndex> index_;
    std::vector<std::vector<NodeIndex>> adjacency_;
    std::size_t edge_count_ = 0;
};

// Prescribed (strong) modes: a subset of a graph's nodes.
class ModeSet {
public:
    ModeSet() = default;
    // Sorts and deduplicates; throws InvalidInput when an index is out of range.
    ModeSet(const Graph& g, NodeSet members);

    static ModeSet from_labels(const Graph& g, const std::vector<std::string>& labels);

    const NodeSet& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(NodeIndex v) const;

    // Membership flags over the node range of the graph the set was built for.
    std::vector<bool> mask(std::size_t node_count) const;

private:
    NodeSet members_;
};

bool operator==(const ModeSet& a, const ModeSet& b);

// Generators. Labels are zero-padded so declaration order is lexicographic.
inline constexpr unsigned kDefaultMaxHypercubeDim = 20;

Graph generate_hypercube(unsigned n, unsigned max_dim = kDefaultMaxHypercubeDim);
Graph generate_path(std::size_t n);
Graph generate_cycle(std::size_t n);
Graph generate_grid(std::size_t rows, std::size_t cols);
Graph generate_complete_bipartite(std::size_t left, std::size_t right);

// Parity classes of the hypercube labelling produced by generate_hypercube(n):
// node index i is the binary string of i, so parity is popcount(i) mod 2.
ModeSet even_parity_set(const Graph& cube, unsigned n);
ModeSet odd_parity_set(const Graph& cube, unsigned n);

bool is_independent(const Graph& g, const ModeSet& c);

// N_C(W): members of c adjacent to at least one node of w.
NodeSet mode_neighbors(const Graph& g, const ModeSet& c, std::span<const NodeIndex> w);
NodeSet mode_neighbors(const Graph& g, const ModeSet& c, NodeIndex x);

// Graph on V \ C joining two nodes iff some member of c is adjacent to both.
// A set W of non-modes is connected here exactly when any two of its nodes are
// joined by a path in g alternating between W and N_C(W).
struct AuxiliaryGraph {
    Graph graph;
    // graph node i corresponds to original node `original[i]`.
    std::vector<NodeIndex> original;
};

// Throws NotIndependent when c contains adjacent nodes.
AuxiliaryGraph auxiliary_graph(const Graph& g, const ModeSet& c);

} // namespace modepoly
