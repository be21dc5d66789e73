#pragma once

#include <stdexcept>

namespace bcb {

/// Inverse of zero or of a zero divisor was requested.
struct ZeroDivisorError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Matrix/vector dimensions do not match the operation.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Matrix larger than the supported desk-scale size (n <= 12).
struct SizeLimitError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operation requires a monic polynomial (leading coefficient exactly 1).
struct NotMonicError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Leading coefficient is zero or a zero divisor and cannot be inverted.
struct NonInvertibleLeadingError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Polynomial has degree 0 (or is identically zero) where degree >= 1 is needed.
struct ZeroDegreeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Iterative solver exhausted its iteration and restart budget.
struct NoConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Real polynomial does not have the +,-,...,- sign pattern required for a
/// unique positive root.
struct InvalidSignPatternError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Weight/parameter vector is malformed: non-positive entries, wrong length,
/// or a normalization constraint violated.
struct BadWeightsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A split component is degenerate (identically zero or constant) where a
/// genuine polynomial is required on both sides.
struct ComponentDegenerateError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Malformed input document (JSON/CSV).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace bcb
