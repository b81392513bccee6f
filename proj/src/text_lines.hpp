#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lightspan/error.hpp"
#include "lightspan/graph.hpp"
#include "lightspan/rational.hpp"

namespace lightspan::detail {

struct TextLine {
    std::size_t number;  // 1-based
    std::vector<std::string_view> tokens;
};

// Splits text into whitespace-separated tokens per line, skipping blank lines
// and lines whose first non-blank character is '#'.
class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    std::optional<TextLine> next() {
        while (pos_ < text_.size()) {
            auto end = text_.find('\n', pos_);
            if (end == std::string_view::npos) end = text_.size();
            std::string_view raw = text_.substr(pos_, end - pos_);
            pos_ = end + 1;
            ++line_;
            if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
            TextLine line{line_, split(raw)};
            if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
            return line;
        }
        return std::nullopt;
    }

    std::size_t line_number() const { return line_; }

    [[noreturn]] void fail(const TextLine& line, const std::string& what) const {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line.number) + ": " + what);
    }

    std::size_t parse_count(const TextLine& line, std::string_view token) const {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            fail(line, "expected a non-negative integer, got '" + std::string(token) + "'");
        }
        return static_cast<std::size_t>(value);
    }

    NodeId parse_node(const TextLine& line, std::string_view token) const {
        std::size_t value = parse_count(line, token);
        if (value > 0xFFFFFFFFull) fail(line, "node id too large");
        return static_cast<NodeId>(value);
    }

    Rational parse_rational(const TextLine& line, std::string_view token) const {
        try {
            return Rational::parse(token);
        } catch (const Error& e) {
            fail(line, e.what());
        }
    }

private:
    static std::vector<std::string_view> split(std::string_view raw) {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
            if (j > i) out.push_back(raw.substr(i, j - i));
            i = j;
        }
        return out;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 0;
};

}  // namespace lightspan::detail
