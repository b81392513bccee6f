#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "lightspan/rational.hpp"

namespace lightspan {

// Lemmas are conditional statements: NotApplicable means the hypothesis
// did not hold, which is distinct from the conclusion failing.
enum class Verdict { Pass, Fail, NotApplicable };

std::string_view to_string(Verdict v);

// A symbolic value that has no exact rational form, kept with a numeric
// approximation (e.g. "15/10^(3/2)").
struct Symbolic {
    std::string expression;
    double approx = 0.0;
    friend bool operator==(const Symbolic&, const Symbolic&) = default;
};

using ReportValue = std::variant<std::int64_t, Rational, Symbolic, std::string, bool>;

struct LemmaReport {
    std::string lemma;
    std::string instance;
    Verdict verdict = Verdict::Pass;
    std::vector<std::pair<std::string, ReportValue>> counts;
    // Violations of the conclusion; nonempty implies Fail for dispersion-type lemmas.
    std::vector<std::string> witnesses;
    // Context such as the cycle that breaks a hypothesis.
    std::vector<std::string> notes;
    std::vector<LemmaReport> details;

    bool passed() const { return verdict != Verdict::Fail; }

    LemmaReport& set(std::string key, ReportValue value);
    const ReportValue* find(std::string_view key) const;
    std::int64_t integer(std::string_view key) const;
    Rational rational(std::string_view key) const;

    std::string to_text() const;
    nlohmann::ordered_json to_json() const;
};

std::string format_value(const ReportValue& value);

}  // namespace lightspan
