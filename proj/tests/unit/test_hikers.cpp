#include <doctest.h>

#include <random>
#include <set>

#include "lightspan/error.hpp"
#include "lightspan/generators.hpp"
#include "lightspan/hikers.hpp"

using namespace lightspan;

namespace {

std::vector<std::int64_t> count_traversals(const SpanningCycleGraph& scg, const HikerRun& run) {
    std::vector<std::int64_t> out(scg.chord_count(), 0);
    for (const auto& j : run.journeys)
        for (const Step& st : j.path.steps)
            if (st.kind == StepKind::Chord) ++out[st.chord];
    return out;
}

bool ends_distinct(const HikerRun& run) {
    std::set<NodeId> ends;
    for (const auto& j : run.journeys) ends.insert(j.end());
    return ends.size() == run.journeys.size();
}

// Every chord pair of C_n at cycle distance >= d, all of weight w.
SpanningCycleGraph dense(std::size_t n, std::size_t d, const Rational& w) {
    std::vector<Edge> chords;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (std::min<std::size_t>(v - u, n - (v - u)) >= d) chords.push_back({u, v, w});
    return SpanningCycleGraph(n, chords);
}

void check_run(const SpanningCycleGraph& scg, const HikerRun& run, std::int64_t k, const Rational& eps, PathMode mode) {
    CHECK(run.journeys.size() == scg.node_count());
    CHECK(run.positions_always_permutation);
    CHECK(ends_distinct(run));
    CHECK(count_traversals(scg, run) == run.chord_traversals);
    for (const auto& j : run.journeys) {
        CHECK(j.path.start == j.hiker);
        require_walk(scg, j.path.steps);
        CHECK(decompose_path(scg, j.path.steps, k, eps, mode, true).has_value());
        if (mode == PathMode::EdgeSafeMonotone && j.chords_hiked > 0)
            CHECK(classify_path(scg, j.path.steps, static_cast<std::int64_t>(j.chords_hiked), eps, mode, true));
    }
}

}  // namespace

TEST_CASE("warmup: no chords and a single light chord") {
    std::vector<Edge> none;
    SpanningCycleGraph empty(6, none);
    auto r = hiker_protocol_warmup(empty, 2, Rational(1, 2));
    for (const auto& j : r.journeys) CHECK(j.path.steps.empty());
    CHECK(r.total_traversals() == 0);

    std::vector<Edge> one{{1, 4, 3}};
    SpanningCycleGraph scg(8, one);
    auto run = hiker_protocol_warmup(scg, 1, Rational(1, 2));
    CHECK(run.chord_traversals == std::vector<std::int64_t>{2});
    std::size_t walked = 0;
    for (const auto& j : run.journeys) {
        if (j.path.steps.empty()) continue;
        ++walked;
        CHECK(j.path.steps.size() == 1u);
    }
    CHECK(walked == 2u);
    CHECK(run.journeys[1].end() == 4u);
    CHECK(run.journeys[4].end() == 1u);
    check_run(scg, run, 1, Rational(1, 2), PathMode::EdgeSafeMonotone);
}

TEST_CASE("warmup: shifted swaps") {
    std::vector<Edge> one{{0, 4, 4}};
    SpanningCycleGraph scg(8, one);
    auto run = hiker_protocol_warmup(scg, 1, Rational(1, 2));
    // s = 0 and s = 1.
    CHECK(run.chord_traversals == std::vector<std::int64_t>{4});
    check_run(scg, run, 1, Rational(1, 2), PathMode::EdgeSafeMonotone);
    try {
        hiker_protocol_warmup(scg, 1, 2);
        FAIL("overlapping windows accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PreconditionViolated);
    }
    CHECK_THROWS_AS(hiker_protocol_warmup(scg, 0, 1), Error);
    CHECK_THROWS_AS(hiker_protocol_warmup(scg, 1, 0), Error);
}

TEST_CASE("full: no chords and one bucket-0 chord") {
    std::vector<Edge> none;
    auto r = hiker_protocol_full(SpanningCycleGraph(6, none), 2, 1);
    for (const auto& j : r.journeys) CHECK(j.days.empty());
    CHECK(r.t_by_bucket.empty());

    std::vector<Edge> one{{0, 4, 1}};
    SpanningCycleGraph scg(8, one);
    auto run = hiker_protocol_full(scg, 2, 1);
    REQUIRE(run.t_by_bucket.size() == 1);
    CHECK(run.t_by_bucket[0] == std::pair<int, std::int64_t>{0, 1});
    CHECK(run.chord_traversals == std::vector<std::int64_t>{2});
    std::size_t walked = 0;
    for (const auto& j : run.journeys) {
        if (j.path.steps.empty()) continue;
        ++walked;
        REQUIRE(j.path.steps.size() == 3u);
        CHECK(j.path.steps[0].kind == StepKind::Forward);
        CHECK(j.path.steps[1].kind == StepKind::Chord);
        CHECK(j.path.steps[2].kind == StepKind::Backward);
    }
    CHECK(walked == 2u);
    CHECK(format_path(scg, run.journeys[7].path) == "7: F C:0-4 B");
    CHECK(format_path(scg, run.journeys[3].path) == "3: F C:4-0 B");
    check_run(scg, run, 2, 1, PathMode::BucketMonotone);

    // t_0 = floor(1/2) = 0: the bucket is skipped.
    auto skipped = hiker_protocol_full(scg, 1, 1);
    CHECK(skipped.t_by_bucket[0].second == 0);
    CHECK(skipped.total_traversals() == 0);
}

TEST_CASE("full: traversal counts and validity on random instances") {
    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 60; ++rep) {
        std::size_t n = 6 + rng() % 10;
        auto scg = cycle_plus_chords(n, 1 + rng() % 5, {1, 9, 2}, rng());
        std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 3);
        Rational eps = std::vector<Rational>{Rational(1, 4), Rational(1, 2), 1}[rng() % 3];
        auto run = hiker_protocol_full(scg, k, eps);
        check_run(scg, run, k, eps, PathMode::BucketMonotone);
        auto seen = count_traversals(scg, run);
        for (std::size_t c = 0; c < scg.chord_count(); ++c) {
            int i = bucket_index(scg.chord(c).w);
            // t_i = floor(eps k 2^(i-1)), computed without the library helper.
            Rational t_exact = eps * Rational(k) * Rational(std::int64_t{1} << i) / Rational(2);
            CHECK(seen[c] == 2 * t_exact.floor());
        }
    }
}

TEST_CASE("warmup: traversal counts and validity on random instances") {
    std::mt19937_64 rng(31);
    int ran = 0;
    for (int rep = 0; rep < 60; ++rep) {
        std::size_t n = 8 + rng() % 10;
        auto scg = cycle_plus_chords(n, 1 + rng() % 5, {1, 8, 1}, rng());
        Rational eps = std::vector<Rational>{Rational(1, 4), Rational(1, 2)}[rng() % 2];
        HikerRun run;
        try {
            run = hiker_protocol_warmup(scg, 2, eps);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::PreconditionViolated);
            continue;
        }
        ++ran;
        check_run(scg, run, 2, eps, PathMode::EdgeSafeMonotone);
        auto seen = count_traversals(scg, run);
        for (std::size_t c = 0; c < scg.chord_count(); ++c) {
            Rational half = eps * scg.chord(c).w / Rational(2);
            CHECK(seen[c] == 2 * (half.floor() + 1));
        }
    }
    CHECK(ran > 30);
}

TEST_CASE("dense instances reach k chords") {
    auto scg = dense(8, 3, 4);
    CHECK(scg.chord_count() == 12u);
    for (std::int64_t k = 1; k <= 4; ++k) {
        CHECK(scg.chord_weight() >= Rational(k * 8));
        auto run = hiker_protocol_warmup(scg, k, 1);
        check_run(scg, run, k, 1, PathMode::EdgeSafeMonotone);
        CHECK(run.max_chords() >= static_cast<std::size_t>(k));
    }
    auto full = dense(6, 2, 4);
    CHECK(full.chord_weight() >= Rational(24));
    for (std::int64_t k = 1; k <= 2; ++k) {
        auto run = hiker_protocol_full(full, k, 1);
        check_run(full, run, k, 1, PathMode::BucketMonotone);
        CHECK(run.max_chords() >= static_cast<std::size_t>(k));
    }
}
