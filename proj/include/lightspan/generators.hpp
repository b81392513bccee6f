#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lightspan/graph.hpp"
#include "lightspan/rational.hpp"
#include "lightspan/spanning_cycle.hpp"

namespace lightspan {

// Weights drawn uniformly from the grid lo, lo + 1/denominator, ..., hi.
struct WeightRange {
    Rational lo = Rational(1);
    Rational hi = Rational(1);
    std::int64_t denominator = 1;
};

struct GeneratorSpec {
    std::string family = "gnm";  // gnm, geometric, grid, cycle-plus-chords, petersen, complete
    std::size_t n = 10;
    std::size_t m = 20;           // gnm
    std::size_t rows = 3;         // grid
    std::size_t cols = 3;         // grid
    std::size_t chords = 2;       // cycle-plus-chords
    Rational radius = Rational(0);  // geometric; 0 connects every pair
    WeightRange weights;
    std::uint64_t seed = 1;
};

// Deterministic per spec. Disconnected samples are joined by random edges
// between components. Throws BadParams.
WeightedGraph generate(const GeneratorSpec& spec);

WeightedGraph gnm_graph(std::size_t n, std::size_t m, const WeightRange& weights, std::uint64_t seed);
// Points with coordinates in (1/2^20)Z inside the unit square; weights are
// Euclidean distances rounded up to a multiple of 1/2^20.
WeightedGraph geometric_graph(std::size_t n, const Rational& radius, std::uint64_t seed);
WeightedGraph grid_graph(std::size_t rows, std::size_t cols, const WeightRange& weights, std::uint64_t seed);
WeightedGraph petersen_graph();
WeightedGraph complete_graph(std::size_t n, const WeightRange& weights, std::uint64_t seed);
WeightedGraph cycle_graph(std::size_t n);
SpanningCycleGraph cycle_plus_chords(std::size_t n, std::size_t chords, const WeightRange& weights,
                                     std::uint64_t seed);

std::vector<std::string_view> generator_families();

}  // namespace lightspan
