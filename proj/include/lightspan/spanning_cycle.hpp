#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lightspan/graph.hpp"
#include "lightspan/rational.hpp"

namespace lightspan {

// A graph whose nodes 0..n-1 lie on an implicit unit-weight Hamiltonian
// cycle (i, i+1 mod n). Forward is the direction of increasing index.
// Every other edge is a chord of weight >= 1; chords are stored sorted by
// EdgeKey, so chord index order is the canonical weight order.
class SpanningCycleGraph {
public:
    SpanningCycleGraph() = default;

    // Throws BadParams (n < 3), IdOutOfRange, SelfLoop, DuplicateEdge (also
    // for a chord parallel to a cycle edge) or PreconditionViolated (w < 1).
    SpanningCycleGraph(std::size_t node_count, std::span<const Edge> chords);

    std::size_t node_count() const noexcept { return n_; }
    std::size_t chord_count() const noexcept { return chords_.size(); }
    const std::vector<Edge>& chords() const noexcept { return chords_; }
    const Edge& chord(std::size_t index) const { return chords_.at(index); }
    const std::vector<std::size_t>& chords_at(NodeId v) const { return incident_.at(v); }
    std::optional<std::size_t> find_chord(NodeId u, NodeId v) const;

    NodeId forward(NodeId v) const { return static_cast<NodeId>((v + 1) % n_); }
    NodeId backward(NodeId v) const { return static_cast<NodeId>((v + n_ - 1) % n_); }
    NodeId advance(NodeId v, std::int64_t steps) const;
    std::size_t forward_distance(NodeId from, NodeId to) const { return (to + n_ - from) % n_; }
    std::size_t cycle_distance(NodeId a, NodeId b) const;
    bool is_cycle_edge(NodeId a, NodeId b) const { return a != b && (forward(a) == b || forward(b) == a); }

    Rational chord_weight() const;                // w(H \ C)
    Rational max_chord_weight() const;            // 0 when there are no chords
    Rational total_weight() const { return Rational(static_cast<std::int64_t>(n_)) + chord_weight(); }

    WeightedGraph to_graph() const;
    SpanningCycleGraph without_chord(std::size_t index) const;
    SpanningCycleGraph with_chords(std::span<const Edge> chords) const { return SpanningCycleGraph(n_, chords); }

    friend bool operator==(const SpanningCycleGraph& a, const SpanningCycleGraph& b) {
        return a.n_ == b.n_ && a.chords_ == b.chords_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> chords_;
    std::vector<std::vector<std::size_t>> incident_;
};

// Text format: "n c" then c chord lines "u v w"; cycle edges are implicit.
SpanningCycleGraph parse_spanning_cycle(std::string_view text);
std::string serialize_spanning_cycle(const SpanningCycleGraph& scg);

}  // namespace lightspan
