#pragma once

#include <vector>

#include "lightspan/graph.hpp"
#include "lightspan/rational.hpp"

namespace lightspan {

struct SpannerResult {
    WeightedGraph spanner;
    Rational stretch;
    std::vector<EdgeKey> added_order;
    std::vector<EdgeKey> rejected;
};

// Greedy t-spanner: scan edges by EdgeKey, keep (u, v) iff the current
// spanner distance exceeds t * w(u, v). Throws InvalidStretch for t < 1.
SpannerResult greedy_spanner(const WeightedGraph& g, const Rational& t);

struct StretchViolation {
    NodeId u;
    NodeId v;
    std::optional<Rational> dist_h;  // nullopt: disconnected in h
    Rational dist_g;
};

// All pairs u < v with dist_h(u, v) > t * dist_g(u, v). Throws NotSubgraph
// if h is not an edge-subgraph of g on the same node set.
std::vector<StretchViolation> verify_stretch(const WeightedGraph& g, const WeightedGraph& h, const Rational& t);

// Throws NotSubgraph unless every edge of h appears in g with equal weight.
void require_subgraph(const WeightedGraph& g, const WeightedGraph& h);

}  // namespace lightspan
