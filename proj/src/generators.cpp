#include "lightspan/generators.hpp"

#include <algorithm>
#include <set>

#include "lightspan/error.hpp"
#include "lightspan/random.hpp"
#include "union_find.hpp"

namespace lightspan {

namespace {

Rational draw_weight(Rng& rng, const WeightRange& r) {
    if (r.denominator < 1 || !r.lo.is_positive() || r.hi < r.lo) {
        throw Error(ErrorKind::BadParams, "weight range needs 0 < lo <= hi and denominator >= 1");
    }
    Rational span = (r.hi - r.lo) * Rational(r.denominator);
    std::int64_t steps = span.floor();
    return r.lo + Rational(uniform_int(rng, 0, steps), r.denominator);
}

// Adds one random edge between each extra component and the rest.
void connect_components(std::size_t n, std::vector<Edge>& edges, Rng& rng, const WeightRange& weights) {
    detail::UnionFind uf(n);
    for (const Edge& e : edges) uf.unite(e.u, e.v);
    std::vector<NodeId> order(n);
    for (NodeId v = 0; v < n; ++v) order[v] = v;
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
    for (std::size_t i = 1; i < n; ++i) {
        NodeId v = order[i];
        NodeId u = order[uniform_below(rng, i)];
        if (uf.unite(u, v)) edges.push_back({u, v, draw_weight(rng, weights)});
    }
}

std::uint64_t isqrt(std::uint64_t x) {
    std::uint64_t r = 0;
    for (std::uint64_t bit = std::uint64_t{1} << 62; bit; bit >>= 2) {
        if (x >= r + bit) {
            x -= r + bit;
            r = (r >> 1) + bit;
        } else {
            r >>= 1;
        }
    }
    return r;
}

}  // namespace

WeightedGraph gnm_graph(std::size_t n, std::size_t m, const WeightRange& weights, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorKind::BadParams, "gnm needs n >= 1");
    const std::size_t pairs = n * (n - 1) / 2;
    if (m > pairs) throw Error(ErrorKind::BadParams, "m exceeds n(n-1)/2");
    Rng rng(seed);
    std::set<std::pair<NodeId, NodeId>> chosen;
    std::vector<Edge> edges;
    while (chosen.size() < m) {
        auto u = static_cast<NodeId>(uniform_below(rng, n));
        auto v = static_cast<NodeId>(uniform_below(rng, n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (!chosen.insert({u, v}).second) continue;
        edges.push_back({u, v, draw_weight(rng, weights)});
    }
    connect_components(n, edges, rng, weights);
    return WeightedGraph(n, edges);
}

WeightedGraph geometric_graph(std::size_t n, const Rational& radius, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorKind::BadParams, "geometric needs n >= 1");
    if (radius < Rational(0)) throw Error(ErrorKind::BadParams, "radius must be non-negative");
    constexpr std::int64_t kScale = std::int64_t{1} << 20;
    Rng rng(seed);
    std::vector<std::pair<std::int64_t, std::int64_t>> pts(n);
    for (auto& p : pts) p = {uniform_int(rng, 0, kScale), uniform_int(rng, 0, kScale)};
    auto dist = [&](std::size_t a, std::size_t b) {
        auto dx = static_cast<std::uint64_t>(std::abs(pts[a].first - pts[b].first));
        auto dy = static_cast<std::uint64_t>(std::abs(pts[a].second - pts[b].second));
        std::uint64_t sq = dx * dx + dy * dy;
        std::uint64_t r = isqrt(sq);
        if (r * r < sq) ++r;
        return Rational(static_cast<std::int64_t>(std::max<std::uint64_t>(r, 1)), kScale);
    };
    std::vector<Edge> edges;
    for (NodeId a = 0; a < n; ++a) {
        for (NodeId b = a + 1; b < n; ++b) {
            Rational d = dist(a, b);
            if (radius.num() == 0 || d <= radius) edges.push_back({a, b, d});
        }
    }
    // Join components along their closest pair.
    detail::UnionFind uf(n);
    for (const Edge& e : edges) uf.unite(e.u, e.v);
    for (;;) {
        std::optional<Edge> best;
        for (NodeId a = 0; a < n; ++a) {
            for (NodeId b = a + 1; b < n; ++b) {
                if (uf.find(a) == uf.find(b)) continue;
                Edge e{a, b, dist(a, b)};
                if (!best || e.key() < best->key()) best = e;
            }
        }
        if (!best) break;
        uf.unite(best->u, best->v);
        edges.push_back(*best);
    }
    return WeightedGraph(n, edges);
}

WeightedGraph grid_graph(std::size_t rows, std::size_t cols, const WeightRange& weights, std::uint64_t seed) {
    if (rows < 1 || cols < 1) throw Error(ErrorKind::BadParams, "grid needs rows, cols >= 1");
    Rng rng(seed);
    std::vector<Edge> edges;
    auto id = [&](std::size_t r, std::size_t c) { return static_cast<NodeId>(r * cols + c); };
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), draw_weight(rng, weights)});
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), draw_weight(rng, weights)});
        }
    }
    return WeightedGraph(rows * cols, edges);
}

WeightedGraph petersen_graph() {
    std::vector<Edge> edges;
    for (NodeId i = 0; i < 5; ++i) {
        edges.push_back({i, static_cast<NodeId>((i + 1) % 5), Rational(1)});
        edges.push_back({i, static_cast<NodeId>(i + 5), Rational(1)});
        edges.push_back({static_cast<NodeId>(i + 5), static_cast<NodeId>((i + 2) % 5 + 5), Rational(1)});
    }
    return WeightedGraph(10, edges);
}

WeightedGraph complete_graph(std::size_t n, const WeightRange& weights, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorKind::BadParams, "complete needs n >= 1");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b) edges.push_back({a, b, draw_weight(rng, weights)});
    return WeightedGraph(n, edges);
}

WeightedGraph cycle_graph(std::size_t n) {
    if (n < 3) throw Error(ErrorKind::BadParams, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i) edges.push_back({i, static_cast<NodeId>((i + 1) % n), Rational(1)});
    return WeightedGraph(n, edges);
}

SpanningCycleGraph cycle_plus_chords(std::size_t n, std::size_t chords, const WeightRange& weights,
                                     std::uint64_t seed) {
    if (n < 3) throw Error(ErrorKind::BadParams, "cycle-plus-chords needs n >= 3");
    if (chords > n * (n - 1) / 2 - n) throw Error(ErrorKind::BadParams, "too many chords for n");
    if (weights.lo < Rational(1)) throw Error(ErrorKind::BadParams, "chord weights must be >= 1");
    Rng rng(seed);
    std::set<std::pair<NodeId, NodeId>> chosen;
    std::vector<Edge> edges;
    while (chosen.size() < chords) {
        auto u = static_cast<NodeId>(uniform_below(rng, n));
        auto v = static_cast<NodeId>(uniform_below(rng, n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (v == u + 1 || (u == 0 && v == n - 1)) continue;
        if (!chosen.insert({u, v}).second) continue;
        edges.push_back({u, v, draw_weight(rng, weights)});
    }
    return SpanningCycleGraph(n, edges);
}

WeightedGraph generate(const GeneratorSpec& spec) {
    const std::string& f = spec.family;
    if (f == "gnm") return gnm_graph(spec.n, spec.m, spec.weights, spec.seed);
    if (f == "geometric") return geometric_graph(spec.n, spec.radius, spec.seed);
    if (f == "grid") return grid_graph(spec.rows, spec.cols, spec.weights, spec.seed);
    if (f == "petersen") return petersen_graph();
    if (f == "complete") return complete_graph(spec.n, spec.weights, spec.seed);
    if (f == "cycle-plus-chords") {
        WeightRange w = spec.weights;
        if (w.lo < Rational(1)) w.lo = Rational(1);
        if (w.hi < w.lo) w.hi = w.lo;
        return cycle_plus_chords(spec.n, spec.chords, w, spec.seed).to_graph();
    }
    throw Error(ErrorKind::BadParams, "unknown generator family '" + f + "'");
}

std::vector<std::string_view> generator_families() {
    return {"gnm", "geometric", "grid", "cycle-plus-chords", "petersen", "complete"};
}

}  // namespace lightspan
