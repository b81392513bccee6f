#include "lightspan/spanner.hpp"

#include "lightspan/error.hpp"

namespace lightspan {

SpannerResult greedy_spanner(const WeightedGraph& g, const Rational& t) {
    if (t < Rational(1)) throw Error(ErrorKind::InvalidStretch, "t = " + t.to_string() + " is below 1");
    SpannerResult result;
    result.stretch = t;
    std::vector<std::vector<Arc>> adj(g.node_count());
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
        Rational budget = t * e.w;
        auto d = bounded_distance(adj, e.u, e.v, budget);
        if (d && *d <= budget) {
            result.rejected.push_back(e.key());
            continue;
        }
        adj[e.u].push_back({e.v, e.w});
        adj[e.v].push_back({e.u, e.w});
        kept.push_back(e);
        result.added_order.push_back(e.key());
    }
    result.spanner = WeightedGraph(g.node_count(), kept);
    return result;
}

void require_subgraph(const WeightedGraph& g, const WeightedGraph& h) {
    if (g.node_count() != h.node_count()) {
        throw Error(ErrorKind::NotSubgraph, "node counts differ (" + std::to_string(g.node_count()) + " vs " +
                                                std::to_string(h.node_count()) + ")");
    }
    for (const Edge& e : h.edges()) {
        auto w = g.weight(e.u, e.v);
        if (!w || *w != e.w) {
            throw Error(ErrorKind::NotSubgraph, "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ", " +
                                                    e.w.to_string() + ") is not in the base graph");
        }
    }
}

std::vector<StretchViolation> verify_stretch(const WeightedGraph& g, const WeightedGraph& h, const Rational& t) {
    require_subgraph(g, h);
    std::vector<StretchViolation> violations;
    const auto n = static_cast<NodeId>(g.node_count());
    for (NodeId u = 0; u < n; ++u) {
        auto dg = distances_from(g.adjacency(), u);
        auto dh = distances_from(h.adjacency(), u);
        for (NodeId v = u + 1; v < n; ++v) {
            if (!dg[v]) continue;
            if (!dh[v] || *dh[v] > t * *dg[v]) violations.push_back({u, v, dh[v], *dg[v]});
        }
    }
    return violations;
}

}  // namespace lightspan
