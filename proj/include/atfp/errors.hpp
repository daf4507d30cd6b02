#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace atfp {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. Carries a 1-based line and column.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

enum class InstanceErrorKind { DuplicatePair, DegeneratePair, OutOfRange };

/// An instance that violates the distinct-pairs / in-range requirements.
class InvalidInstance : public Error {
public:
    InvalidInstance(InstanceErrorKind kind, const std::string& what) : Error(what), kind_(kind) {}
    InstanceErrorKind kind() const noexcept { return kind_; }

private:
    InstanceErrorKind kind_;
};

enum class PreconditionKind {
    NotATFree,
    Disconnected,
    NotATree,
    NotACycle,
    TooLarge,
    BudgetExceeded,
    PreconditionViolated,
    SameComponent,
    GenerationFailed,
};

/// A caller-side precondition was not met (exit code 3 at the CLI).
class PreconditionError : public Error {
public:
    PreconditionError(PreconditionKind kind, const std::string& what) : Error(what), kind_(kind) {}
    PreconditionKind kind() const noexcept { return kind_; }

private:
    PreconditionKind kind_;
};

/// A structural guarantee of the algorithm failed to hold. Either the input was
/// outside the supported class or there is a bug (exit code 4 at the CLI).
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace atfp
