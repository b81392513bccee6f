#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lightspan/generators.hpp"
#include "lightspan/rational.hpp"

namespace lightspan {

struct ExperimentConfig {
    GeneratorSpec generator;           // n and seed are overridden per instance
    std::vector<std::size_t> sizes{32, 64, 128};
    std::vector<std::int64_t> ks{1, 2};
    Rational eps = Rational(1, 2);
    std::size_t edges_per_node = 4;    // gnm: m = edges_per_node * n, capped at n(n-1)/2
    std::size_t repetitions = 1;
    bool verify = true;                // all-pairs stretch check per row
};

struct TradeoffRow {
    std::size_t n = 0;
    std::size_t m = 0;
    std::int64_t k = 1;
    Rational eps;
    Rational t;
    std::size_t spanner_edges = 0;
    Rational w_h;
    Rational w_mst;
    Rational lightness;
    double n_pow_1_over_k = 0.0;
    double ratio = 0.0;  // lightness / (n^(1/k) / eps)
    std::uint64_t seed = 0;
    bool stretch_verified = false;
};

struct TradeoffSummary {
    double max_ratio = 0.0;
    bool all_lightness_at_least_one = true;
    bool all_stretch_verified = true;
    // One line per k describing how lightness and ratio move as n grows.
    std::vector<std::string> trends;
};

// t = (1+eps)(2k-1).
Rational tradeoff_stretch(std::int64_t k, const Rational& eps);

std::vector<TradeoffRow> run_tradeoff(const ExperimentConfig& config);
TradeoffSummary summarize(const std::vector<TradeoffRow>& rows);

std::string tradeoff_csv_header();
std::string to_csv(const TradeoffRow& row);
std::string to_csv(const std::vector<TradeoffRow>& rows);

}  // namespace lightspan
