#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lightspan/girth.hpp"
#include "lightspan/graph.hpp"
#include "lightspan/rational.hpp"
#include "lightspan/report.hpp"
#include "lightspan/safe_paths.hpp"
#include "lightspan/spanning_cycle.hpp"

namespace lightspan {

struct LemmaOptions {
    std::size_t girth_node_limit = kDefaultGirthNodeLimit;
    EnumerationLimits limits;
    // Weighted girth of the instance when the caller already knows it.
    std::optional<WeightedGirth> girth;
};

// Edge-simple k-paths are unique per unordered endpoint pair when the
// unweighted girth exceeds 2k (NotApplicable otherwise).
LemmaReport check_unweighted_dispersion(const WeightedGraph& g, std::int64_t k, const LemmaOptions& opt = {});

// Monotone safe k-paths are unique per (start, end) when the weighted girth
// exceeds (1+2eps)2k.
LemmaReport check_monotone_dispersion(const SpanningCycleGraph& scg, std::int64_t k, const Rational& eps,
                                      const LemmaOptions& opt = {});

// Bucket-monotone safe k-paths are unique per (start, end) when the
// weighted girth exceeds (1+4eps)2k; records the count against n^2.
LemmaReport check_bucket_monotone_dispersion(const SpanningCycleGraph& scg, std::int64_t k, const Rational& eps,
                                             const LemmaOptions& opt = {});

// Distinct edge-safe paths with a common start (or common end) node are
// safe for distinct chords. Checked when the weighted girth exceeds 2(1+2eps).
LemmaReport check_edge_safe_matching(const SpanningCycleGraph& scg, const Rational& eps,
                                     const LemmaOptions& opt = {});

// Distinct bucket-safe paths (at most k chords) with a common start (or
// common end) have distinct chord sequences. Checked when the weighted
// girth exceeds (1+4eps)2k.
LemmaReport check_bucket_safe_matching(const SpanningCycleGraph& scg, std::int64_t k, const Rational& eps,
                                       const LemmaOptions& opt = {});

// Every bucket-monotone safe k-path uses k distinct chords. Checked when
// the weighted girth exceeds (1+2eps)k.
LemmaReport check_bucket_monotone_distinct(const SpanningCycleGraph& scg, std::int64_t k, const Rational& eps,
                                           const LemmaOptions& opt = {});

// Runs the hiker protocol for `mode` (warmup for EdgeSafeMonotone, full for
// BucketMonotone) and checks that the density hypothesis yields a journey
// with at least k chords. Journey validity, the permutation invariant and
// the per-chord traversal count are checked as well.
LemmaReport check_weak_counting(const SpanningCycleGraph& scg, std::int64_t k, const Rational& eps, PathMode mode);

// Deletion loop: take a journey with >= k chords, record its shifted family
// of safe k-paths, delete its first chord, repeat while the density
// hypothesis holds.
LemmaReport run_medium_counting(const SpanningCycleGraph& scg, std::int64_t k, const Rational& eps, PathMode mode);

// Surviving-path count under independent chord subsampling against the
// exact expectation from enumeration. Throws InvalidProbability.
LemmaReport monte_carlo_full_counting(const SpanningCycleGraph& scg, std::int64_t k, const Rational& eps,
                                      const Rational& keep_prob, std::int64_t trials, std::uint64_t seed,
                                      PathMode mode = PathMode::BucketMonotone, const LemmaOptions& opt = {});

// n, m, girth, k-path count, dispersion and m / n^(1+1/k).
LemmaReport moore_bound_report(const WeightedGraph& g, std::int64_t k, const LemmaOptions& opt = {});

// Reduction, girth hypothesis, dispersion and counting on the reduced
// instance, and w(H) / (n^(1+1/k) / eps).
LemmaReport main_theorem_report(const WeightedGraph& h, std::int64_t k, const Rational& eps,
                                const LemmaOptions& opt = {});

// "a/b^(p/q)" with the exponent reduced; e.g. ratio_expression(15, 10, 3/2).
Symbolic power_ratio(const Rational& numerator, std::int64_t base, const Rational& exponent);

}  // namespace lightspan
