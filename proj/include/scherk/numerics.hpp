#pragma once

// Shared numeric substrate: bracketing root finder, damped least-squares
// minimizer, adaptive quadrature and Richardson-extrapolated finite
// differences.  Everything here is pure and reentrant.

#include <functional>
#include <vector>

#include "scherk/errors.hpp"

namespace scherk::numerics {

struct RootBracket {
    double lo;
    double hi;
    double tol = 1e-12;
};

struct LeastSquaresOptions {
    int max_iterations = 200;
    double residual_tol = 1e-11;   // on the max-norm of the residual
    double step_tol = 1e-14;       // on the max-norm of an accepted step
    double initial_damping = 1e-3;
};

struct LeastSquaresResult {
    std::vector<double> x;
    double residual_inf = 0.0;
    int iterations = 0;
};

// Bisection on [lo, hi].  Requires a sign change across the bracket; the
// returned point lies inside the initial bracket and the final bracket width
// is at most tol.
double find_root_bisect(const std::function<double(double)>& f,
                        const RootBracket& bracket);

// Small dense Levenberg-Marquardt with a scalar damping term.  Damping is
// multiplied by 10 on a rejected step and divided by 10 on an accepted one;
// accepted steps never increase the residual 2-norm.  Trial points where the
// residual throws or is non-finite count as rejections.  Throws
// ConvergenceError (carrying the best iterate) if the residual max-norm never
// reaches residual_tol.
LeastSquaresResult solve_least_squares(
    const std::function<std::vector<double>(const std::vector<double>&)>& residual,
    const std::vector<double>& x0, const LeastSquaresOptions& opts = {});

struct QuadratureResult {
    double value = 0.0;
    long subdivisions = 0;
};

// Adaptive Simpson with interval halving.  |result - integral| <= tol for
// smooth integrands; throws AccuracyError when the recursion depth limit is
// hit before the local tolerance is met.
QuadratureResult integrate_adaptive_ex(const std::function<double(double)>& f,
                                       double a, double b, double tol);

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol);

// Central difference of the given order (1 or 2) with one Richardson
// extrapolation step; error O(h^4) for smooth f, exact on cubics.
double fd_derivative(const std::function<double(double)>& f, double x,
                     double h, int order);

// Dense linear solve by Gaussian elimination with partial pivoting (row-major
// n x n matrix).  Used by the LM solver and the 3x3 normal equations of the
// second-derivative recovery.  Throws ConditioningError on a vanishing pivot.
std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b);

}  // namespace scherk::numerics
