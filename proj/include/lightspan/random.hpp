#pragma once

#include <cstdint>
#include <random>

#include "lightspan/error.hpp"
#include "lightspan/rational.hpp"

namespace lightspan {

// mt19937_64 is specified bit-for-bit by the standard, so seeded runs are
// portable. Distributions from <random> are not, hence the helpers below.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Seed of an independent substream, e.g. one Monte Carlo trial.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ (index * 0xD1B54A32D192ED03ull));
}

// Uniform integer in [0, bound), bound > 0, by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

// Exact Bernoulli(p) for rational p in [0, 1].
inline bool bernoulli(Rng& rng, const Rational& p) {
    if (p < Rational(0) || p > Rational(1)) {
        throw Error(ErrorKind::InvalidProbability, "probability " + p.to_string() + " outside [0, 1]");
    }
    return uniform_below(rng, static_cast<std::uint64_t>(p.den())) < static_cast<std::uint64_t>(p.num());
}

}  // namespace lightspan
