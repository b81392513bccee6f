#include "lightspan/report.hpp"

#include <sstream>

#include "lightspan/error.hpp"

namespace lightspan {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "not-applicable";
    }
    return "unknown";
}

std::string format_value(const ReportValue& value) {
    struct Visitor {
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(const Rational& v) const { return v.to_string(); }
        std::string operator()(const Symbolic& v) const {
            std::ostringstream out;
            out << v.expression << " (~" << v.approx << ")";
            return out.str();
        }
        std::string operator()(const std::string& v) const { return v; }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
    };
    return std::visit(Visitor{}, value);
}

LemmaReport& LemmaReport::set(std::string key, ReportValue value) {
    for (auto& [k, v] : counts) {
        if (k == key) {
            v = std::move(value);
            return *this;
        }
    }
    counts.emplace_back(std::move(key), std::move(value));
    return *this;
}

const ReportValue* LemmaReport::find(std::string_view key) const {
    for (const auto& [k, v] : counts)
        if (k == key) return &v;
    return nullptr;
}

std::int64_t LemmaReport::integer(std::string_view key) const {
    const ReportValue* v = find(key);
    if (!v || !std::holds_alternative<std::int64_t>(*v)) {
        throw Error(ErrorKind::BadParams, "report has no integer '" + std::string(key) + "'");
    }
    return std::get<std::int64_t>(*v);
}

Rational LemmaReport::rational(std::string_view key) const {
    const ReportValue* v = find(key);
    if (v && std::holds_alternative<Rational>(*v)) return std::get<Rational>(*v);
    if (v && std::holds_alternative<std::int64_t>(*v)) return Rational(std::get<std::int64_t>(*v));
    throw Error(ErrorKind::BadParams, "report has no rational '" + std::string(key) + "'");
}

namespace {

void append_text(const LemmaReport& r, std::ostringstream& out, const std::string& prefix) {
    out << prefix << "lemma: " << r.lemma << '\n';
    out << prefix << "instance: " << r.instance << '\n';
    out << prefix << "verdict: " << to_string(r.verdict) << '\n';
    for (const auto& [k, v] : r.counts) out << prefix << k << ": " << format_value(v) << '\n';
    for (const auto& w : r.witnesses) out << prefix << "witness: " << w << '\n';
    for (const auto& n : r.notes) out << prefix << "note: " << n << '\n';
    for (const auto& d : r.details) append_text(d, out, prefix + "  ");
}

}  // namespace

std::string LemmaReport::to_text() const {
    std::ostringstream out;
    append_text(*this, out, "");
    return out.str();
}

nlohmann::ordered_json LemmaReport::to_json() const {
    nlohmann::ordered_json j;
    j["lemma"] = lemma;
    j["instance"] = instance;
    j["verdict"] = std::string(to_string(verdict));
    nlohmann::ordered_json c = nlohmann::ordered_json::object();
    for (const auto& [k, v] : counts) {
        std::visit(
            [&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, Rational>) {
                    c[k] = x.to_string();
                } else if constexpr (std::is_same_v<T, Symbolic>) {
                    c[k] = {{"expr", x.expression}, {"approx", x.approx}};
                } else {
                    c[k] = x;
                }
            },
            v);
    }
    j["counts"] = c;
    j["witnesses"] = witnesses;
    j["notes"] = notes;
    nlohmann::ordered_json d = nlohmann::ordered_json::array();
    for (const auto& sub : details) d.push_back(sub.to_json());
    j["details"] = d;
    return j;
}

}  // namespace lightspan
