#pragma once

#include <stdexcept>
#include <string>

namespace fiberplan {

/// Base class for every error the planner reports to callers.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numeric precondition was violated (non-positive length, bad split ratio, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The input is well-formed but inconsistent: unknown profile, unknown
/// standard, missing or mistyped field.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Malformed network description text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace fiberplan
