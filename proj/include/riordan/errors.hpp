#pragma once

#include <stdexcept>
#include <string>

namespace riordan {

// Base for every arithmetic/domain failure in the library.  The CLI maps
// MathError to exit code 3 and ParseError (see exprlang.hpp) to exit code 2.
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficient or row requested beyond what a truncated object stores.
struct OutOfOrderError : MathError {
    using MathError::MathError;
};

// Division by the zero series or the zero rational.
struct DivisionByZeroError : MathError {
    using MathError::MathError;
};

// Division where the numerator's valuation is smaller than the denominator's,
// i.e. the quotient would leave the power-series ring.
struct ValuationError : MathError {
    using MathError::MathError;
};

// Substitution of a series with nonzero constant term.
struct CompositionError : MathError {
    using MathError::MathError;
};

// Reversion of a series whose valuation is not exactly 1.
struct ReversionError : MathError {
    using MathError::MathError;
};

// Derivative of a series stored only to order 0.
struct DerivativeError : MathError {
    using MathError::MathError;
};

// Negative integer power of a series with zero constant term.
struct PowerError : MathError {
    using MathError::MathError;
};

// Rational power whose exact q-th root does not exist in the rationals,
// or whose base has zero constant term.
struct RootError : MathError {
    using MathError::MathError;
};

// Violated membership condition at construction time (unit constant term,
// zero constant term with nonzero linear term, order too small).
struct InvariantError : MathError {
    using MathError::MathError;
};

// Lower-triangular matrix with a zero on the diagonal.
struct SingularTriangleError : MathError {
    using MathError::MathError;
};

// Data that fails a solvability condition, e.g. an A/Z extraction whose
// bracket has valuation 0.
struct InconsistencyError : MathError {
    using MathError::MathError;
};

}  // namespace riordan
