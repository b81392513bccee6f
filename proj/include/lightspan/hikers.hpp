#pragma once

#include <cstdint>
#include <vector>

#include "lightspan/rational.hpp"
#include "lightspan/safe_paths.hpp"
#include "lightspan/spanning_cycle.hpp"

namespace lightspan {

// The steps one hiker walked on one day. In the warmup protocol a "day" is
// one chord (index into scg.chords()) and budget is the shift s used.
struct HikerDay {
    int day = 0;
    std::int64_t budget = 0;
    std::vector<Step> steps;
};

struct HikerJourney {
    NodeId hiker = 0;  // also the start node
    std::vector<HikerDay> days;
    SafePath path;
    std::size_t chords_hiked = 0;

    NodeId end() const { return path.end(); }
};

struct HikerRun {
    std::vector<HikerJourney> journeys;
    // Occurrences of each chord over all walked steps.
    std::vector<std::int64_t> chord_traversals;
    bool positions_always_permutation = true;
    // (bucket, t_i) for the full protocol; empty for the warmup.
    std::vector<std::pair<int, std::int64_t>> t_by_bucket;

    std::int64_t total_traversals() const;
    std::size_t max_chords() const;
};

// Chords in EdgeKey order; for s = 0..floor(eps*w/2) the hikers standing
// at u-s and v-s swap along F^s C B^s. Throws PreconditionViolated when
// the two endpoint windows of some chord overlap.
HikerRun hiker_protocol_warmup(const SpanningCycleGraph& scg, std::int64_t k, const Rational& eps);

// One day per bucket in increasing order with t_i = floor(eps*k*2^(i-1));
// buckets with t_i = 0 are skipped.
HikerRun hiker_protocol_full(const SpanningCycleGraph& scg, std::int64_t k, const Rational& eps);

}  // namespace lightspan
