#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace goodlab {

/// Input violates a documented precondition or invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text document; carries the 1-based offending line.
class ParseError : public ValidationError {
public:
    ParseError(std::size_t line, const std::string& what)
        : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Vertex id outside [0, n).
class RangeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A caller-supplied enumeration budget was exhausted.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Randomized construction gave up after its retry cap.
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation called on an input outside its contract (e.g. girth too small).
class PreconditionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

}  // namespace goodlab
