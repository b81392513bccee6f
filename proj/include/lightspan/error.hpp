#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lightspan {

enum class ErrorKind {
    DuplicateEdge,
    SelfLoop,
    NonPositiveWeight,
    IdOutOfRange,
    ParseError,
    InvalidStretch,
    NotSubgraph,
    NotACycle,
    MissingEdge,
    TooLarge,
    Disconnected,
    IsForest,
    PreconditionViolated,
    NotAWalk,
    InvalidProbability,
    BadParams,
    ArithmeticOverflow,
    DivisionByZero,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library is reported through this type; `kind()`
// identifies the contract that was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace lightspan
