#include "lightspan/tradeoff.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "lightspan/error.hpp"
#include "lightspan/girth.hpp"
#include "lightspan/random.hpp"
#include "lightspan/spanner.hpp"

namespace lightspan {

Rational tradeoff_stretch(std::int64_t k, const Rational& eps) {
    if (k < 1) throw Error(ErrorKind::BadParams, "k must be at least 1");
    return (Rational(1) + eps) * Rational(2 * k - 1);
}

std::vector<TradeoffRow> run_tradeoff(const ExperimentConfig& config) {
    if (!config.eps.is_positive()) throw Error(ErrorKind::BadParams, "eps must be positive");
    std::vector<TradeoffRow> rows;
    for (std::size_t n : config.sizes) {
        for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
            GeneratorSpec spec = config.generator;
            spec.n = n;
            spec.m = std::min(config.edges_per_node * n, n * (n - 1) / 2);
            spec.seed = derive_seed(config.generator.seed, n * 1000 + rep);
            WeightedGraph g = generate(spec);
            for (std::int64_t k : config.ks) {
                TradeoffRow row;
                row.n = g.node_count();
                row.m = g.edge_count();
                row.k = k;
                row.eps = config.eps;
                row.t = tradeoff_stretch(k, config.eps);
                row.seed = spec.seed;
                auto result = greedy_spanner(g, row.t);
                row.spanner_edges = result.spanner.edge_count();
                row.w_h = result.spanner.total_weight();
                row.w_mst = total_weight(minimum_spanning_tree(g));
                row.lightness = lightness(result.spanner, g);
                row.n_pow_1_over_k = std::pow(static_cast<double>(row.n), 1.0 / static_cast<double>(k));
                row.ratio = row.lightness.to_double() * config.eps.to_double() / row.n_pow_1_over_k;
                row.stretch_verified = config.verify && verify_stretch(g, result.spanner, row.t).empty();
                rows.push_back(row);
            }
        }
    }
    return rows;
}

namespace {

std::string trend_of(const std::vector<double>& xs) {
    if (xs.size() < 2) return "single point";
    bool up = true;
    bool down = true;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (xs[i] < xs[i - 1]) up = false;
        if (xs[i] > xs[i - 1]) down = false;
    }
    if (up && down) return "flat";
    if (up) return "nondecreasing";
    if (down) return "nonincreasing";
    return "mixed";
}

std::string fixed(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

}  // namespace

TradeoffSummary summarize(const std::vector<TradeoffRow>& rows) {
    TradeoffSummary s;
    std::map<std::int64_t, std::map<std::size_t, std::pair<double, double>>> by_k;  // k -> n -> (max lightness, max ratio)
    for (const auto& r : rows) {
        s.max_ratio = std::max(s.max_ratio, r.ratio);
        if (r.lightness < Rational(1)) s.all_lightness_at_least_one = false;
        if (!r.stretch_verified) s.all_stretch_verified = false;
        auto& cell = by_k[r.k][r.n];
        cell.first = std::max(cell.first, r.lightness.to_double());
        cell.second = std::max(cell.second, r.ratio);
    }
    for (const auto& [k, by_n] : by_k) {
        std::vector<double> light;
        std::vector<double> ratio;
        for (const auto& [n, cell] : by_n) {
            light.push_back(cell.first);
            ratio.push_back(cell.second);
        }
        s.trends.push_back("k=" + std::to_string(k) + ": lightness " + trend_of(light) + " in n, ratio " +
                           trend_of(ratio) + " in n");
    }
    return s;
}

std::string tradeoff_csv_header() { return "n,m,k,eps,t,spanner_edges,w_H,w_MST,lightness,n_pow_1_over_k,ratio"; }

std::string to_csv(const TradeoffRow& r) {
    std::ostringstream out;
    out << r.n << ',' << r.m << ',' << r.k << ',' << r.eps << ',' << r.t << ',' << r.spanner_edges << ',' << r.w_h
        << ',' << r.w_mst << ',' << fixed(r.lightness.to_double()) << ',' << fixed(r.n_pow_1_over_k) << ','
        << fixed(r.ratio);
    return out.str();
}

std::string to_csv(const std::vector<TradeoffRow>& rows) {
    std::string out = tradeoff_csv_header() + "\n";
    for (const auto& r : rows) out += to_csv(r) + "\n";
    return out;
}

}  // namespace lightspan
