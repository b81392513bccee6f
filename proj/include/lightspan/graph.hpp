#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lightspan/rational.hpp"

namespace lightspan {

using NodeId = std::uint32_t;

// Canonical tiebreak order over edges: weight first, then endpoints.
struct EdgeKey {
    Rational weight;
    NodeId lo = 0;
    NodeId hi = 0;

    friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
    friend std::strong_ordering operator<=>(const EdgeKey& a, const EdgeKey& b) {
        if (auto c = a.weight <=> b.weight; c != 0) return c;
        if (auto c = a.lo <=> b.lo; c != 0) return c;
        return a.hi <=> b.hi;
    }
};

// Undirected weighted edge. Inside a WeightedGraph `u < v` always holds.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;
    Rational w;

    EdgeKey key() const { return EdgeKey{w, u < v ? u : v, u < v ? v : u}; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
    NodeId to;
    Rational w;
};

// Simple undirected graph with exact positive weights. Immutable after
// construction; edges are stored sorted by EdgeKey.
class WeightedGraph {
public:
    WeightedGraph() = default;

    // Validates and canonicalizes. Throws Error with kinds SelfLoop,
    // DuplicateEdge, NonPositiveWeight or IdOutOfRange naming the edge.
    WeightedGraph(std::size_t node_count, std::span<const Edge> edges);

    std::size_t node_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Arc>& neighbors(NodeId v) const { return adj_.at(v); }
    const std::vector<std::vector<Arc>>& adjacency() const noexcept { return adj_; }

    std::optional<Rational> weight(NodeId u, NodeId v) const;
    bool has_edge(NodeId u, NodeId v) const { return weight(u, v).has_value(); }
    Rational total_weight() const;

    // The subgraph on the same node set keeping only `keep`.
    WeightedGraph with_edges(std::span<const Edge> keep) const { return WeightedGraph(n_, keep); }

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    static std::uint64_t pair_id(NodeId u, NodeId v) {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(u) << 32) | v;
    }

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Arc>> adj_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

WeightedGraph build_graph(std::size_t node_count, std::span<const Edge> edges);

// Exact shortest-path distance; nullopt means unreachable. With a cutoff the
// search stops once every remaining candidate exceeds it and reports
// nullopt, so the answer is exact whenever the true distance is <= cutoff.
std::optional<Rational> shortest_path_distance(const WeightedGraph& g, NodeId u, NodeId v,
                                               std::optional<Rational> cutoff = std::nullopt);

// Same as above over a raw adjacency list (used while a graph is still growing).
std::optional<Rational> bounded_distance(const std::vector<std::vector<Arc>>& adj, NodeId source, NodeId target,
                                         const std::optional<Rational>& cutoff);

// Single-source exact distances over an adjacency list.
std::vector<std::optional<Rational>> distances_from(const std::vector<std::vector<Arc>>& adj, NodeId source);

// Kruskal under EdgeKey order; a spanning forest when g is disconnected.
// Edges are returned in acceptance order.
std::vector<Edge> minimum_spanning_tree(const WeightedGraph& g);

std::size_t component_count(const WeightedGraph& g);
bool is_connected(const WeightedGraph& g);

Rational total_weight(std::span<const Edge> edges);

// Text format: "n m" then m lines "u v w"; '#' lines are comments.
WeightedGraph parse_graph(std::string_view text);
std::string serialize_graph(const WeightedGraph& g);

}  // namespace lightspan
