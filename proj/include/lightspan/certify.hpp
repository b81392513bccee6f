#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lightspan/girth.hpp"
#include "lightspan/report.hpp"
#include "lightspan/safe_paths.hpp"

namespace lightspan {

struct CertifyParams {
    std::int64_t k = 2;
    Rational eps = Rational(1, 4);
    Rational t = Rational(3);
    Rational keep_prob = Rational(1, 2);
    std::int64_t trials = 2000;
    std::uint64_t seed = 1;
    PathMode mode = PathMode::BucketMonotone;
    std::size_t girth_node_limit = kDefaultGirthNodeLimit;
};

const std::vector<std::string>& certifier_ids();

// True for certifiers that read a general graph; the rest read a
// spanning-cycle instance.
bool certifier_takes_graph(std::string_view id);

// Parses `input` in the format the certifier expects and runs it. Throws
// BadParams for an unknown id.
LemmaReport run_certifier(std::string_view id, std::string_view input, const CertifyParams& params);

}  // namespace lightspan
