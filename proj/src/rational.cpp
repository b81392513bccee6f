#include "lightspan/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "lightspan/error.hpp"

namespace lightspan {

namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

u128 abs128(i128 x) { return x < 0 ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::int64_t narrow(i128 x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < -std::numeric_limits<std::int64_t>::max()) {
        throw Error(ErrorKind::ArithmeticOverflow, "rational component exceeds 64 bits");
    }
    return static_cast<std::int64_t>(x);
}

// Reduces num/den (den != 0) and returns the normalized pair.
std::pair<std::int64_t, std::int64_t> normalize(i128 num, i128 den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return {0, 1};
    u128 g = gcd128(abs128(num), static_cast<u128>(den));
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
    return {narrow(num), narrow(den)};
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

i128 parse_digits(std::string_view s, std::string_view whole) {
    i128 value = 0;
    for (char c : s) {
        value = value * 10 + (c - '0');
        if (value > std::numeric_limits<std::int64_t>::max()) {
            throw Error(ErrorKind::ParseError, "number too large: '" + std::string(whole) + "'");
        }
    }
    return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    auto [n, d] = normalize(num, den);
    num_ = n;
    den_ = d;
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw Error(ErrorKind::ParseError, "not a rational number: '" + std::string(text) + "'");
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto p = body.substr(0, slash);
        auto q = body.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) return fail();
        i128 den = parse_digits(q, text);
        if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
        auto [n, d] = normalize(parse_digits(p, text), den);
        result.num_ = n;
        result.den_ = d;
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto int_part = body.substr(0, dot);
        auto frac_part = body.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) return fail();
        if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) return fail();
        if (frac_part.size() > 18) throw Error(ErrorKind::ParseError, "too many decimals: '" + std::string(text) + "'");
        i128 scale = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
        i128 whole = int_part.empty() ? 0 : parse_digits(int_part, text);
        i128 frac = frac_part.empty() ? 0 : parse_digits(frac_part, text);
        auto [n, d] = normalize(whole * scale + frac, scale);
        result.num_ = n;
        result.den_ = d;
    } else {
        if (!all_digits(body)) return fail();
        result.num_ = narrow(parse_digits(body, text));
    }
    if (negative) result.num_ = -result.num_;
    return result;
}

std::int64_t Rational::floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == rhs.den_) {
        auto [n, d] = normalize(static_cast<i128>(num_) + rhs.num_, den_);
        num_ = n;
        den_ = d;
        return *this;
    }
    auto [n, d] = normalize(static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_,
                            static_cast<i128>(den_) * rhs.den_);
    num_ = n;
    den_ = d;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    auto [n, d] = normalize(static_cast<i128>(num_) * rhs.num_, static_cast<i128>(den_) * rhs.den_);
    num_ = n;
    den_ = d;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
    auto [n, d] = normalize(static_cast<i128>(num_) * rhs.den_, static_cast<i128>(den_) * rhs.num_);
    num_ = n;
    den_ = d;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow2(int exponent) {
    if (exponent >= 62 || exponent <= -62) throw Error(ErrorKind::ArithmeticOverflow, "2^" + std::to_string(exponent));
    if (exponent >= 0) return Rational(std::int64_t{1} << exponent);
    return Rational(1, std::int64_t{1} << -exponent);
}

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
        case ErrorKind::IdOutOfRange: return "IdOutOfRange";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidStretch: return "InvalidStretch";
        case ErrorKind::NotSubgraph: return "NotSubgraph";
        case ErrorKind::NotACycle: return "NotACycle";
        case ErrorKind::MissingEdge: return "MissingEdge";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::IsForest: return "IsForest";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::NotAWalk: return "NotAWalk";
        case ErrorKind::InvalidProbability: return "InvalidProbability";
        case ErrorKind::BadParams: return "BadParams";
        case ErrorKind::ArithmeticOverflow: return "ArithmeticOverflow";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
    }
    return "Unknown";
}

}  // namespace lightspan
