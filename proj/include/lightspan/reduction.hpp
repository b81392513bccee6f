#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lightspan/girth.hpp"
#include "lightspan/graph.hpp"
#include "lightspan/spanning_cycle.hpp"

namespace lightspan {

struct ReductionStats {
    std::size_t node_count = 0;
    Rational mst_weight;
    Rational lightness;                         // l(H) = w(H) / w(MST(H))
    std::optional<WeightedGirth> weighted_girth;  // filled only when requested
};

struct Subdivision {
    Edge original;            // MST edge after rescaling
    std::size_t path_length;  // ceil(w)
};

struct ReductionTrace {
    Rational scale_factor = Rational(1);
    std::vector<Subdivision> subdivisions;
    // Output node -> input node. Subdivision nodes have no preimage.
    std::vector<std::optional<NodeId>> node_map;
    ReductionStats original;
    ReductionStats reduced;

    // l(reduced) / l(original), the realized constant of the reduction.
    Rational lightness_ratio() const { return reduced.lightness / original.lightness; }
};

// Rescale so the average MST edge weighs 1, subdivide heavier MST edges into
// ceil(w) pieces, then raise every weight below 1 to exactly 1.
// Throws Disconnected or IsForest.
std::pair<WeightedGraph, ReductionTrace> normalize_unit_mst(const WeightedGraph& h);

// Maps a DFS tour of the (all-unit) MST onto a unit spanning cycle of
// 2n - 2 nodes; every non-tree edge becomes a chord between the first tour
// occurrences of its endpoints. Throws Disconnected or PreconditionViolated.
std::pair<SpanningCycleGraph, ReductionTrace> to_spanning_cycle(const WeightedGraph& h);

// Both steps. When girth_node_limit is set, weighted girth is computed for
// the input and the output (each subject to that node limit).
std::pair<SpanningCycleGraph, ReductionTrace> full_reduction(const WeightedGraph& h,
                                                             std::optional<std::size_t> girth_node_limit = std::nullopt);

ReductionStats graph_stats(const WeightedGraph& g);

}  // namespace lightspan
