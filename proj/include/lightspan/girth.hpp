#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lightspan/graph.hpp"
#include "lightspan/rational.hpp"
#include "lightspan/report.hpp"

namespace lightspan {

class SpanningCycleGraph;

inline constexpr std::size_t kDefaultGirthNodeLimit = 12;

struct CycleWitness {
    std::vector<NodeId> cycle;  // simple, listed without repeating the first node
    Rational total_weight;
    Rational max_edge_weight;
    Rational normalized_weight;  // total_weight / max_edge_weight

    std::string to_string() const;
};

// w*(C) for a simple cycle given as a node sequence (the closing repeat of
// the first node is optional). Throws NotACycle or MissingEdge.
CycleWitness normalized_cycle_weight(const WeightedGraph& g, std::span<const NodeId> cycle);

struct WeightedGirth {
    std::optional<Rational> value;  // nullopt: the graph is a forest (infinite girth)
    std::optional<CycleWitness> witness;

    bool infinite() const { return !value.has_value(); }
    std::string to_string() const { return value ? value->to_string() : "inf"; }
};

// Minimum w*(C) over all simple cycles by exhaustive enumeration with
// lower-bound pruning. Ties between witnesses go to the cycle whose sorted
// EdgeKey list is lexicographically smallest. Throws TooLarge if
// n > node_limit.
WeightedGirth weighted_girth(const WeightedGraph& g, std::size_t node_limit = kDefaultGirthNodeLimit);

// Shortest cycle length by BFS from every node; nullopt for forests.
std::optional<std::size_t> unweighted_girth(const WeightedGraph& g);

// w(h) / w(MST(g)). Throws Disconnected or NotSubgraph.
Rational lightness(const WeightedGraph& h, const WeightedGraph& g);

// Runs the greedy spanner and checks that its weighted girth exceeds t + 1.
LemmaReport certify_greedy_girth(const WeightedGraph& g, const Rational& t,
                                 std::size_t node_limit = kDefaultGirthNodeLimit);

// Pass iff every edge weight is below n / (2(t - 1)). Requires t > 1.
LemmaReport check_max_weight_bound(const SpanningCycleGraph& scg, const Rational& t);

}  // namespace lightspan
