#include "modepoly/graph.hpp"

#include "modepoly/degeneracy.hpp"
#include "modepoly/error.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace modepoly {

Graph::Graph(std::vector<std::string> nodes,
             const std::vector<std::pair<std::string, std::string>>& edges) {
    std::unordered_map<std::string, NodeIndex> index;
    for (NodeIndex i = 0; i < nodes.size(); ++i) {
        if (!index.emplace(nodes[i], i).second)
            throw InvalidInput("duplicate node label '" + nodes[i] + "'");
    }
    std::vector<std::pair<NodeIndex, NodeIndex>> idx_edges;
    idx_edges.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end()) throw InvalidInput("edge references unknown node '" + a + "'");
        if (ib == index.end()) throw InvalidInput("edge references unknown node '" + b + "'");
        idx_edges.emplace_back(ia->second, ib->second);
    }
    *this = from_indices(std::move(nodes), idx_edges);
}

Graph Graph::from_indices(std::vector<std::string> nodes,
                          const std::vector<std::pair<NodeIndex, NodeIndex>>& edges) {
    Graph g;
    g.labels_ = std::move(nodes);
    for (NodeIndex i = 0; i < g.labels_.size(); ++i) {
        if (!g.index_.emplace(g.labels_[i], i).second)
            throw InvalidInput("duplicate node label '" + g.labels_[i] + "'");
    }
    g.adjacency_.assign(g.labels_.size(), {});
    std::set<std::pair<NodeIndex, NodeIndex>> seen;
    for (auto [a, b] : edges) {
        if (a >= g.size() || b >= g.size()) throw InvalidInput("edge endpoint out of range");
        if (a == b) throw InvalidInput("loop at node '" + g.labels_[a] + "'");
        if (!seen.emplace(std::min(a, b), std::max(a, b)).second)
            throw InvalidInput("duplicate edge '" + g.labels_[a] + "'-'" + g.labels_[b] + "'");
        g.adjacency_[a].push_back(b);
        g.adjacency_[b].push_back(a);
    }
    for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
    g.edge_count_ = seen.size();
    return g;
}

NodeIndex Graph::index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) throw InvalidInput("unknown node '" + std::string(label) + "'");
    return it->second;
}

bool Graph::contains(std::string_view label) const { return index_.contains(std::string(label)); }

bool Graph::adjacent(NodeIndex a, NodeIndex b) const {
    const auto& adj = adjacency_.at(a);
    return std::binary_search(adj.begin(), adj.end(), b);
}

std::vector<std::pair<std::string, std::string>> Graph::edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(edge_count_);
    for (auto [a, b] : index_edges()) {
        const auto& la = labels_[a];
        const auto& lb = labels_[b];
        out.emplace_back(std::min(la, lb), std::max(la, lb));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<NodeIndex, NodeIndex>> Graph::index_edges() const {
    std::vector<std::pair<NodeIndex, NodeIndex>> out;
    out.reserve(edge_count_);
    for (NodeIndex a = 0; a < size(); ++a)
        for (NodeIndex b : adjacency_[a])
            if (a < b) out.emplace_back(a, b);
    return out;
}

NodeSet Graph::indices_of(const std::vector<std::string>& labels) const {
    NodeSet out;
    out.reserve(labels.size());
    for (const auto& l : labels) out.push_back(index_of(l));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::string> Graph::labels_of(std::span<const NodeIndex> set) const {
    std::vector<std::string> out;
    out.reserve(set.size());
    for (NodeIndex v : set) out.push_back(label(v));
    return out;
}

// ---------------------------------------------------------------------------

ModeSet::ModeSet(const Graph& g, NodeSet members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.back() >= g.size())
        throw InvalidInput("mode index out of range");
}

ModeSet ModeSet::from_labels(const Graph& g, const std::vector<std::string>& labels) {
    return ModeSet(g, g.indices_of(labels));
}

bool ModeSet::contains(NodeIndex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<bool> ModeSet::mask(std::size_t node_count) const {
    std::vector<bool> out(node_count, false);
    for (NodeIndex v : members_) out.at(v) = true;
    return out;
}

bool operator==(const ModeSet& a, const ModeSet& b) { return a.members() == b.members(); }

// ---------------------------------------------------------------------------

namespace {

std::string padded(std::size_t value, std::size_t width) {
    std::string s = std::to_string(value);
    if (s.size() < width) s.insert(0, width - s.size(), '0');
    return s;
}

std::size_t digits(std::size_t max_value) { return std::to_string(max_value).size(); }

} // namespace

Graph generate_hypercube(unsigned n, unsigned max_dim) {
    if (n < 1 || n > max_dim)
        throw InvalidInput("hypercube dimension must be in [1, " + std::to_string(max_dim) + "], got " +
                           std::to_string(n));
    if (n >= 63) throw InvalidInput("hypercube dimension too large");
    const std::size_t count = std::size_t{1} << n;
    std::vector<std::string> labels;
    labels.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::string s(n, '0');
        for (unsigned b = 0; b < n; ++b)
            if (i >> (n - 1 - b) & 1U) s[b] = '1';
        labels.push_back(std::move(s));
    }
    std::vector<std::pair<NodeIndex, NodeIndex>> edges;
    edges.reserve(count * n / 2);
    for (std::size_t i = 0; i < count; ++i)
        for (unsigned b = 0; b < n; ++b) {
            std::size_t j = i ^ (std::size_t{1} << b);
            if (i < j) edges.emplace_back(i, j);
        }
    return Graph::from_indices(std::move(labels), edges);
}

Graph generate_path(std::size_t n) {
    if (n < 1) throw InvalidInput("path needs at least 1 node");
    std::vector<std::string> labels;
    const std::size_t w = digits(n - 1);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(padded(i, w));
    std::vector<std::pair<NodeIndex, NodeIndex>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_indices(std::move(labels), edges);
}

Graph generate_cycle(std::size_t n) {
    if (n < 3) throw InvalidInput("cycle needs at least 3 nodes");
    std::vector<std::string> labels;
    const std::size_t w = digits(n - 1);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(padded(i, w));
    std::vector<std::pair<NodeIndex, NodeIndex>> edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_indices(std::move(labels), edges);
}

Graph generate_grid(std::size_t rows, std::size_t cols) {
    if (rows < 1 || cols < 1) throw InvalidInput("grid dimensions must be at least 1");
    const std::size_t wr = digits(rows - 1);
    const std::size_t wc = digits(cols - 1);
    std::vector<std::string> labels;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) labels.push_back(padded(r, wr) + "," + padded(c, wc));
    std::vector<std::pair<NodeIndex, NodeIndex>> edges;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            std::size_t v = r * cols + c;
            if (c + 1 < cols) edges.emplace_back(v, v + 1);
            if (r + 1 < rows) edges.emplace_back(v, v + cols);
        }
    return Graph::from_indices(std::move(labels), edges);
}

Graph generate_complete_bipartite(std::size_t left, std::size_t right) {
    if (left < 1 || right < 1) throw InvalidInput("bipartite sides must be nonempty");
    std::vector<std::string> labels;
    const std::size_t wl = digits(left - 1);
    const std::size_t wr = digits(right - 1);
    for (std::size_t i = 0; i < left; ++i) labels.push_back("a" + padded(i, wl));
    for (std::size_t j = 0; j < right; ++j) labels.push_back("b" + padded(j, wr));
    std::vector<std::pair<NodeIndex, NodeIndex>> edges;
    for (std::size_t i = 0; i < left; ++i)
        for (std::size_t j = 0; j < right; ++j) edges.emplace_back(i, left + j);
    return Graph::from_indices(std::move(labels), edges);
}

namespace {

ModeSet parity_set(const Graph& cube, unsigned n, unsigned parity) {
    if (cube.size() != (std::size_t{1} << n)) throw InvalidInput("graph is not a hypercube of dimension " + std::to_string(n));
    NodeSet members;
    for (std::size_t i = 0; i < cube.size(); ++i)
        if (static_cast<unsigned>(std::popcount(i)) % 2 == parity) members.push_back(i);
    return ModeSet(cube, std::move(members));
}

} // namespace

ModeSet even_parity_set(const Graph& cube, unsigned n) { return parity_set(cube, n, 0); }
ModeSet odd_parity_set(const Graph& cube, unsigned n) { return parity_set(cube, n, 1); }

bool is_independent(const Graph& g, const ModeSet& c) {
    for (NodeIndex x : c.members())
        for (NodeIndex y : g.neighbors(x))
            if (c.contains(y)) return false;
    return true;
}

NodeSet mode_neighbors(const Graph& g, const ModeSet& c, std::span<const NodeIndex> w) {
    NodeSet out;
    for (NodeIndex x : w)
        for (NodeIndex y : g.neighbors(x))
            if (c.contains(y)) out.push_back(y);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

NodeSet mode_neighbors(const Graph& g, const ModeSet& c, NodeIndex x) {
    const NodeIndex one[] = {x};
    return mode_neighbors(g, c, one);
}

AuxiliaryGraph auxiliary_graph(const Graph& g, const ModeSet& c) {
    require_independent(g, c);
    AuxiliaryGraph aux;
    std::vector<std::size_t> position(g.size(), g.size());
    std::vector<std::string> labels;
    for (NodeIndex v = 0; v < g.size(); ++v) {
        if (c.contains(v)) continue;
        position[v] = aux.original.size();
        aux.original.push_back(v);
        labels.push_back(g.label(v));
    }
    std::set<std::pair<NodeIndex, NodeIndex>> edges;
    for (NodeIndex z : c.members()) {
        auto nb = g.neighbors(z);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                edges.emplace(position[nb[i]], position[nb[j]]);
    }
    aux.graph = Graph::from_indices(std::move(labels), {edges.begin(), edges.end()});
    return aux;
}

} // namespace modepoly
