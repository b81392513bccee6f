#include <doctest.h>

#include <random>

#include "lightspan/error.hpp"
#include "lightspan/generators.hpp"
#include "lightspan/girth.hpp"
#include "lightspan/reduction.hpp"
#include "oracles.hpp"

using namespace lightspan;

namespace {

WeightedGraph g_of(std::size_t n, std::vector<Edge> e) { return build_graph(n, e); }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::BadParams;
}

}  // namespace

TEST_CASE("normalize: heavy MST edge is subdivided and light edges raised") {
    // Path 0-1-2 (weights 1, 3) closed by a heavy chord so it is not a forest.
    auto h = g_of(3, {{0, 1, 1}, {1, 2, 3}, {0, 2, 5}});
    auto [g, trace] = normalize_unit_mst(h);
    CHECK(trace.scale_factor == Rational(1, 2));
    REQUIRE(trace.subdivisions.size() == 1);
    CHECK(trace.subdivisions[0].path_length == 2);
    CHECK(trace.subdivisions[0].original.w == Rational(3, 2));
    CHECK(g.node_count() == 4);
    auto mst = minimum_spanning_tree(g);
    CHECK(mst.size() == 3);
    for (const Edge& e : mst) CHECK(e.w == Rational(1));
    CHECK(*g.weight(0, 2) == Rational(5, 2));
    CHECK(trace.node_map.size() == 4);
    CHECK(!trace.node_map[3]);
    CHECK(weighted_girth(g).value >= weighted_girth(h).value);
}

TEST_CASE("normalize leaves unit-MST graphs alone") {
    auto tri = g_of(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    auto [g, trace] = normalize_unit_mst(tri);
    CHECK(trace.scale_factor == Rational(1));
    CHECK(g == tri);

    auto star = g_of(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 5}});
    auto [s, t2] = normalize_unit_mst(star);
    CHECK(s == star);
    CHECK(t2.subdivisions.empty());
}

TEST_CASE("normalize errors") {
    auto path = g_of(3, {{0, 1, 1}, {1, 2, 3}});
    CHECK(kind_of([&] { normalize_unit_mst(path); }) == ErrorKind::IsForest);
    auto split = g_of(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}});
    CHECK(kind_of([&] { normalize_unit_mst(split); }) == ErrorKind::Disconnected);
    CHECK(kind_of([&] { full_reduction(path); }) == ErrorKind::IsForest);
}

TEST_CASE("tour of a star and of a triangle") {
    auto star = g_of(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
    auto [s, trace] = to_spanning_cycle(star);
    CHECK(s.node_count() == 6);
    CHECK(s.chord_count() == 0);
    REQUIRE(trace.node_map.size() == 6);
    CHECK(trace.node_map[0] == 0u);
    CHECK(trace.node_map[1] == 1u);
    CHECK(trace.node_map[2] == 0u);
    CHECK(trace.node_map[3] == 2u);

    auto tri = g_of(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    auto [c, t3] = to_spanning_cycle(tri);
    CHECK(c.node_count() == 4);
    REQUIRE(c.chord_count() == 1);
    CHECK(c.chord(0) == Edge{1, 3, 1});
    CHECK(weighted_girth(c.to_graph()).value >= Rational(3));

    auto [f, t4] = full_reduction(tri);
    CHECK(f == c);

    auto light = g_of(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, Rational(1, 2)}});
    CHECK(kind_of([&] { to_spanning_cycle(light); }) == ErrorKind::PreconditionViolated);
    auto heavy_tree = g_of(3, {{0, 1, 2}, {1, 2, 2}, {0, 2, 3}});
    CHECK(kind_of([&] { to_spanning_cycle(heavy_tree); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("full reduction invariants on random instances") {
    std::mt19937_64 rng(99);
    std::vector<Rational> ws{1, Rational(3, 2), 2, 5, Rational(1, 3), 9};
    for (int rep = 0; rep < 40; ++rep) {
        std::size_t n = 3 + rng() % 4;
        auto h = oracle::random_connected(rng, n, 1 + rng() % 3, ws);
        auto [scg, trace] = full_reduction(h, 20);
        CHECK(scg.node_count() <= 4 * n - 2);
        CHECK(trace.node_map.size() == scg.node_count());
        std::set<NodeId> hit;
        for (const auto& v : trace.node_map)
            if (v) hit.insert(*v);
        CHECK(hit.size() == n);
        REQUIRE(trace.original.weighted_girth);
        REQUIRE(trace.reduced.weighted_girth);
        auto before = oracle::brute_weighted_girth(h);
        CHECK(trace.original.weighted_girth->value == before);
        CHECK(trace.reduced.weighted_girth->value >= before);
        CHECK(trace.lightness_ratio() >= Rational(1, 8));
        // Rescaled MST weighs n - 1; step three at most doubles it.
        auto [unit, t1] = normalize_unit_mst(h);
        CHECK(total_weight(minimum_spanning_tree(h)) * t1.scale_factor == Rational(static_cast<std::int64_t>(n) - 1));
        CHECK(t1.reduced.mst_weight <= Rational(2 * (static_cast<std::int64_t>(n) - 1)));
    }
}
