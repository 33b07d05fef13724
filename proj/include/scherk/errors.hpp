#pragma once

#include <stdexcept>
#include <string>
#include <vector>
#include <complex>

namespace scherk {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside the documented domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Evaluation requested at (or too close to) a pole of the data.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

// Bisection bracket without a sign change.
struct BracketError : Error {
    using Error::Error;
};

// A user-supplied function produced a non-finite value.
struct EvaluationError : Error {
    using Error::Error;
};

// Adaptive quadrature could not meet the requested tolerance.
struct AccuracyError : Error {
    using Error::Error;
};

// Degenerate configuration (coincident vertices/preimages, vanishing p, ...).
struct DegeneracyError : Error {
    using Error::Error;
};

// Near-singular local linear system.
struct ConditioningError : Error {
    using Error::Error;
};

// File output failure.
struct IoError : Error {
    using Error::Error;
};

// Iteration limit reached; carries the best iterate seen and its residual norm.
struct ConvergenceError : Error {
    std::vector<double> best;
    double residual_norm;
    ConvergenceError(const std::string& msg, std::vector<double> best_iterate,
                     double norm)
        : Error(msg), best(std::move(best_iterate)), residual_norm(norm) {}
};

// Continuation walk in the quadrilateral solver gave up; carries the last
// target w that converged.
struct ContinuationError : Error {
    std::complex<double> last_good_w;
    ContinuationError(const std::string& msg, std::complex<double> w)
        : Error(msg), last_good_w(w) {}
};

}  // namespace scherk
