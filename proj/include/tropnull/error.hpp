#pragma once

#include <stdexcept>
#include <string>

namespace tropnull {

enum class ErrorKind {
    EmptySupport,
    FlavorViolation,
    TagViolation,
    DimensionMismatch,
    SemiringMismatch,
    NonPositivePower,
    NotFullDimensional,
    EmptyInput,
    WrongDimension,
    FlavorMismatch,
    NotAMember,
    EscalationExhausted,
    DimensionTooHigh,
    SyntaxError,
    InvariantViolation,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// True for errors caused by bad input rather than by a broken invariant
    /// inside the library.
    bool is_input_error() const noexcept {
        return kind_ != ErrorKind::EscalationExhausted;
    }

private:
    ErrorKind kind_;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& what)
        : Error(ErrorKind::SyntaxError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace tropnull
