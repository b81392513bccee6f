#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lightspan/graph.hpp"
#include "lightspan/rational.hpp"
#include "lightspan/spanning_cycle.hpp"

namespace lightspan {

inline constexpr std::size_t kNoChord = std::numeric_limits<std::size_t>::max();

enum class StepKind : std::uint8_t { Forward, Backward, Chord };

// One move of a walk on a SpanningCycleGraph. For chord steps `chord` is the
// chord index; traversal direction is given by from/to.
struct Step {
    StepKind kind = StepKind::Forward;
    NodeId from = 0;
    NodeId to = 0;
    std::size_t chord = kNoChord;

    friend bool operator==(const Step&, const Step&) = default;
};

Step forward_step(const SpanningCycleGraph& scg, NodeId from);
Step backward_step(const SpanningCycleGraph& scg, NodeId from);
// Throws NotAWalk if `from` is not an endpoint of the chord.
Step chord_step(const SpanningCycleGraph& scg, std::size_t chord, NodeId from);

// True when b immediately retraces a.
bool backtracks(const Step& a, const Step& b);

// Throws NotAWalk unless every step matches the graph and consecutive
// steps share their joining node.
void require_walk(const SpanningCycleGraph& scg, std::span<const Step> steps);

enum class PathMode { EdgeSafeMonotone, BucketMonotone };

std::string_view to_string(PathMode mode);

// One piece of a decomposition. EdgeSafe: s forward steps, the chord, s
// backward steps. BucketSafe: a non-backtracking walk over chords of one
// bucket with s forward steps preceding s backward steps.
struct Segment {
    enum class Kind : std::uint8_t { EdgeSafe, BucketSafe };
    Kind kind = Kind::EdgeSafe;
    std::size_t chord = kNoChord;  // EdgeSafe only
    int bucket = -1;               // BucketSafe only
    std::int64_t s = 0;
    std::size_t begin = 0;  // step range [begin, end)
    std::size_t end = 0;

    friend bool operator==(const Segment&, const Segment&) = default;
};

struct SafePath {
    NodeId start = 0;
    std::vector<Step> steps;
    std::vector<Segment> decomposition;

    NodeId end() const { return steps.empty() ? start : steps.back().to; }
    std::vector<std::size_t> chord_sequence() const;
    std::size_t chord_count() const;
};

struct Bucket {
    int index = 0;
    std::vector<std::size_t> chords;  // ascending EdgeKey
};

// i with 2^i <= w < 2^(i+1); requires w >= 1.
int bucket_index(const Rational& w);

// Chords grouped by bucket, ascending index, empty buckets omitted.
std::vector<Bucket> bucketize(const SpanningCycleGraph& scg);

// Largest s allowed for an edge-safe segment: floor(eps * w) or, extra-safe,
// floor(eps * w / 2).
std::int64_t edge_safe_cap(const Rational& w, const Rational& eps, bool extra);

// Largest s allowed for a bucket-safe segment of bucket i:
// floor(eps * k * 2^i) or, extra-safe, floor(eps * k * 2^(i-1)).
std::int64_t bucket_safe_cap(int bucket, std::int64_t k, const Rational& eps, bool extra);

// The unique decomposition of `steps` as a monotone safe k-path
// (EdgeSafeMonotone) or bucket-monotone safe k-path (BucketMonotone), or
// nullopt if it is not one. Throws NotAWalk for an invalid walk.
std::optional<std::vector<Segment>> classify_path(const SpanningCycleGraph& scg, std::span<const Step> steps,
                                                  std::int64_t k, const Rational& eps, PathMode mode, bool extra);

// Same decomposition without fixing the chord count: `k` only enters the
// bucket caps. A walk with no steps decomposes into no segments.
std::optional<std::vector<Segment>> decompose_path(const SpanningCycleGraph& scg, std::span<const Step> steps,
                                                   std::int64_t k, const Rational& eps, PathMode mode, bool extra);

struct EnumerationLimits {
    std::size_t max_paths = std::size_t{1} << 21;
};

// All monotone safe (or bucket-monotone safe) k-paths, each carrying its
// decomposition. Output is ordered by start node, then by construction
// order. Throws TooLarge past limits.max_paths.
std::vector<SafePath> enumerate_safe_k_paths(const SpanningCycleGraph& scg, std::int64_t k, const Rational& eps,
                                             PathMode mode, EnumerationLimits limits = {});

// Every path that is safe for a single chord (s = 0..floor(eps*w)), both
// traversal directions.
std::vector<SafePath> enumerate_edge_safe_paths(const SpanningCycleGraph& scg, const Rational& eps,
                                                EnumerationLimits limits = {});

// Every nonempty path safe for one bucket using between 1 and max_chords
// chords, with budget parameter k.
std::vector<SafePath> enumerate_bucket_safe_paths(const SpanningCycleGraph& scg, std::int64_t k, const Rational& eps,
                                                  std::int64_t max_chords, EnumerationLimits limits = {});

// Edge-simple walks with exactly k edges, one per path/reverse pair (the
// lexicographically smaller node sequence is kept).
std::vector<std::vector<NodeId>> enumerate_edge_simple_k_paths(const WeightedGraph& g, std::int64_t k,
                                                               EnumerationLimits limits = {});

// Path dump line: "<start>:" followed by space-separated F, B or C:u-v.
std::string format_path(const SpanningCycleGraph& scg, NodeId start, std::span<const Step> steps);
std::string format_path(const SpanningCycleGraph& scg, const SafePath& path);
// Inverse of format_path. Throws ParseError or NotAWalk.
std::pair<NodeId, std::vector<Step>> parse_path(const SpanningCycleGraph& scg, std::string_view line);

}  // namespace lightspan
