#include "lightspan/reduction.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "lightspan/error.hpp"

namespace lightspan {

namespace {

void require_reducible(const WeightedGraph& h) {
    if (!is_connected(h)) throw Error(ErrorKind::Disconnected, "reduction needs a connected graph");
    if (h.edge_count() + 1 <= h.node_count()) throw Error(ErrorKind::IsForest, "reduction needs a graph with a cycle");
}

std::set<std::pair<NodeId, NodeId>> pair_set(const std::vector<Edge>& edges) {
    std::set<std::pair<NodeId, NodeId>> s;
    for (const Edge& e : edges) s.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
    return s;
}

}  // namespace

ReductionStats graph_stats(const WeightedGraph& g) {
    ReductionStats s;
    s.node_count = g.node_count();
    s.mst_weight = total_weight(minimum_spanning_tree(g));
    s.lightness = s.mst_weight.num() == 0 ? Rational(1) : g.total_weight() / s.mst_weight;
    return s;
}

std::pair<WeightedGraph, ReductionTrace> normalize_unit_mst(const WeightedGraph& h) {
    require_reducible(h);
    ReductionTrace trace;
    trace.original = graph_stats(h);
    const auto n = static_cast<NodeId>(h.node_count());
    trace.scale_factor = Rational(static_cast<std::int64_t>(n) - 1) / trace.original.mst_weight;
    auto tree = pair_set(minimum_spanning_tree(h));

    std::vector<Edge> edges;
    NodeId next = n;
    trace.node_map.resize(n);
    for (NodeId v = 0; v < n; ++v) trace.node_map[v] = v;
    for (const Edge& raw : h.edges()) {
        Edge e{raw.u, raw.v, raw.w * trace.scale_factor};
        bool in_tree = tree.count({e.u, e.v}) > 0;
        if (!in_tree || e.w <= Rational(1)) {
            edges.push_back(e);
            continue;
        }
        std::int64_t pieces = e.w.ceil();
        Rational piece = e.w / Rational(pieces);
        trace.subdivisions.push_back({e, static_cast<std::size_t>(pieces)});
        NodeId prev = e.u;
        for (std::int64_t i = 1; i < pieces; ++i) {
            edges.push_back({prev, next, piece});
            trace.node_map.emplace_back(std::nullopt);
            prev = next++;
        }
        edges.push_back({prev, e.v, piece});
    }
    for (Edge& e : edges)
        if (e.w < Rational(1)) e.w = Rational(1);
    WeightedGraph out(next, edges);
    trace.reduced = graph_stats(out);
    return {std::move(out), std::move(trace)};
}

std::pair<SpanningCycleGraph, ReductionTrace> to_spanning_cycle(const WeightedGraph& h) {
    if (!is_connected(h)) throw Error(ErrorKind::Disconnected, "tour reduction needs a connected graph");
    if (h.node_count() < 3) throw Error(ErrorKind::PreconditionViolated, "tour reduction needs at least 3 nodes");
    for (const Edge& e : h.edges()) {
        if (e.w < Rational(1)) {
            throw Error(ErrorKind::PreconditionViolated, "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                                             ") has weight " + e.w.to_string() + " below 1");
        }
    }
    auto mst = minimum_spanning_tree(h);
    for (const Edge& e : mst) {
        if (e.w != Rational(1)) {
            throw Error(ErrorKind::PreconditionViolated, "MST edge (" + std::to_string(e.u) + ", " +
                                                             std::to_string(e.v) + ") is not unit weight");
        }
    }
    ReductionTrace trace;
    trace.original = graph_stats(h);

    const auto n = static_cast<NodeId>(h.node_count());
    std::vector<std::vector<NodeId>> children(n);
    for (const Edge& e : mst) {
        children[e.u].push_back(e.v);
        children[e.v].push_back(e.u);
    }
    for (auto& c : children) std::sort(c.begin(), c.end());

    // Euler tour from node 0, children in ascending id; the closing return
    // to the root is dropped so the tour has exactly 2n - 2 positions.
    std::vector<NodeId> tour;
    std::function<void(NodeId, NodeId)> visit = [&](NodeId v, NodeId parent) {
        tour.push_back(v);
        for (NodeId c : children[v]) {
            if (c == parent) continue;
            visit(c, v);
            tour.push_back(v);
        }
    };
    visit(0, n);
    tour.pop_back();

    std::vector<std::optional<NodeId>> first_position(n);
    for (std::size_t i = 0; i < tour.size(); ++i)
        if (!first_position[tour[i]]) first_position[tour[i]] = static_cast<NodeId>(i);

    auto tree = pair_set(mst);
    std::vector<Edge> chords;
    for (const Edge& e : h.edges()) {
        if (tree.count({e.u, e.v})) continue;
        chords.push_back({*first_position[e.u], *first_position[e.v], e.w});
    }
    SpanningCycleGraph scg(tour.size(), chords);
    trace.node_map.assign(tour.begin(), tour.end());
    trace.reduced = graph_stats(scg.to_graph());
    return {std::move(scg), std::move(trace)};
}

std::pair<SpanningCycleGraph, ReductionTrace> full_reduction(const WeightedGraph& h,
                                                             std::optional<std::size_t> girth_node_limit) {
    auto [unit, first] = normalize_unit_mst(h);
    auto [scg, second] = to_spanning_cycle(unit);
    ReductionTrace trace;
    trace.scale_factor = first.scale_factor;
    trace.subdivisions = std::move(first.subdivisions);
    trace.node_map.reserve(second.node_map.size());
    for (const auto& mid : second.node_map) trace.node_map.push_back(first.node_map.at(*mid));
    trace.original = first.original;
    trace.reduced = second.reduced;
    if (girth_node_limit) {
        trace.original.weighted_girth = weighted_girth(h, *girth_node_limit);
        trace.reduced.weighted_girth = weighted_girth(scg.to_graph(), *girth_node_limit);
    }
    return {std::move(scg), std::move(trace)};
}

}  // namespace lightspan
