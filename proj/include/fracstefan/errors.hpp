#pragma once

#include <stdexcept>
#include <string>

namespace fracstefan {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the mathematical or configured domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// A series or iteration failed to meet its stopping rule within budget.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

/// Requested target lies outside the attainable range of a monotone function.
class RangeError : public Error {
public:
    explicit RangeError(const std::string& msg) : Error(msg) {}
};

/// Geometric bracket expansion failed to straddle the target.
class BracketError : public Error {
public:
    explicit BracketError(const std::string& msg) : Error(msg) {}
};

/// The similarity root would fall beyond the series domain bound.
class DomainBoundExceededError : public DomainError {
public:
    explicit DomainBoundExceededError(const std::string& msg) : DomainError(msg) {}
};

/// Data violates the strict existence/uniqueness inequality of a case.
class InadmissibleError : public Error {
public:
    InadmissibleError(std::string condition_id, const std::string& detail)
        : Error(condition_id + ": " + detail), condition(std::move(condition_id)) {}

    std::string condition;
};

/// A coefficient required as known input for the selected case is absent.
class MissingCoefficientError : public Error {
public:
    explicit MissingCoefficientError(const std::string& msg) : Error(msg) {}
};

/// Malformed configuration input (unknown key, wrong type, bad value).
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& msg) : Error(msg) {}
};

} // namespace fracstefan
