#include "scherk/numerics.hpp"

#include <cmath>
#include <limits>

namespace scherk::numerics {

double find_root_bisect(const std::function<double(double)>& f,
                        const RootBracket& bracket) {
    double lo = bracket.lo, hi = bracket.hi;
    if (!(lo < hi)) throw DomainError("find_root_bisect: requires lo < hi");
    if (!(bracket.tol > 0)) throw DomainError("find_root_bisect: tol must be positive");

    double flo = f(lo), fhi = f(hi);
    if (!std::isfinite(flo) || !std::isfinite(fhi))
        throw EvaluationError("find_root_bisect: non-finite value at bracket endpoint");
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0)
        throw BracketError("find_root_bisect: no sign change across bracket");

    while (hi - lo > bracket.tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at machine resolution
        const double fm = f(mid);
        if (!std::isfinite(fm))
            throw EvaluationError("find_root_bisect: non-finite value inside bracket");
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(a[r * n + col]) > std::fabs(a[piv * n + col])) piv = r;
        if (std::fabs(a[piv * n + col]) < 1e-300)
            throw ConditioningError("solve_dense: singular matrix");
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
            std::swap(b[piv], b[col]);
        }
        const double inv = 1.0 / a[col * n + col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double fac = a[r * n + col] * inv;
            if (fac == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r * n + c] -= fac * a[col * n + c];
            b[r] -= fac * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a[i * n + c] * x[c];
        x[i] = s / a[i * n + i];
    }
    return x;
}

namespace {

double norm_inf(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

double norm2sq(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace

LeastSquaresResult solve_least_squares(
    const std::function<std::vector<double>(const std::vector<double>&)>& residual,
    const std::vector<double>& x0, const LeastSquaresOptions& opts) {
    if (opts.max_iterations < 1 || opts.residual_tol <= 0 || opts.step_tol <= 0 ||
        opts.initial_damping <= 0)
        throw DomainError("solve_least_squares: options must be positive");

    const std::size_t n = x0.size();
    std::vector<double> x = x0;
    std::vector<double> r = residual(x);
    if (!all_finite(r))
        throw EvaluationError("solve_least_squares: residual not finite at x0");
    double err2 = norm2sq(r);
    double lambda = opts.initial_damping;

    std::vector<double> best_x = x;
    double best_inf = norm_inf(r);

    for (int iter = 1; iter <= opts.max_iterations; ++iter) {
        if (norm_inf(r) <= opts.residual_tol)
            return {x, norm_inf(r), iter - 1};

        const std::size_t m = r.size();
        // Jacobian by central differences.
        std::vector<double> J(m * n);
        for (std::size_t j = 0; j < n; ++j) {
            const double h = 1e-6 * std::max(1.0, std::fabs(x[j]));
            std::vector<double> xp = x, xm = x;
            xp[j] += h;
            xm[j] -= h;
            const std::vector<double> rp = residual(xp), rm = residual(xm);
            if (rp.size() != m || rm.size() != m || !all_finite(rp) || !all_finite(rm))
                throw EvaluationError("solve_least_squares: residual not finite near iterate");
            const double inv2h = 1.0 / (2.0 * h);
            for (std::size_t i = 0; i < m; ++i) J[i * n + j] = (rp[i] - rm[i]) * inv2h;
        }
        std::vector<double> jtj(n * n, 0.0), jtr(n, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                jtr[j] += J[i * n + j] * r[i];
                for (std::size_t k = j; k < n; ++k) jtj[j * n + k] += J[i * n + j] * J[i * n + k];
            }
        }
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < j; ++k) jtj[j * n + k] = jtj[k * n + j];

        bool accepted = false;
        for (int attempt = 0; attempt < 30 && !accepted; ++attempt) {
            std::vector<double> a = jtj;
            for (std::size_t j = 0; j < n; ++j) a[j * n + j] += lambda;
            std::vector<double> rhs(n);
            for (std::size_t j = 0; j < n; ++j) rhs[j] = -jtr[j];

            std::vector<double> step;
            try {
                step = solve_dense(std::move(a), std::move(rhs));
            } catch (const ConditioningError&) {
                lambda *= 10.0;
                continue;
            }
            std::vector<double> xt(n);
            for (std::size_t j = 0; j < n; ++j) xt[j] = x[j] + step[j];

            std::vector<double> rt;
            bool ok = true;
            try {
                rt = residual(xt);
                ok = rt.size() == m && all_finite(rt);
            } catch (const Error&) {
                ok = false;
            }
            if (ok && norm2sq(rt) < err2) {
                x = std::move(xt);
                r = std::move(rt);
                err2 = norm2sq(r);
                lambda = std::max(lambda / 10.0, 1e-16);
                accepted = true;
                if (norm_inf(r) < best_inf) {
                    best_inf = norm_inf(r);
                    best_x = x;
                }
                if (norm_inf(step) <= opts.step_tol && norm_inf(r) > opts.residual_tol)
                    throw ConvergenceError(
                        "solve_least_squares: step stalled above residual tolerance",
                        best_x, best_inf);
            } else {
                lambda *= 10.0;
            }
        }
        if (!accepted)
            throw ConvergenceError("solve_least_squares: no acceptable step found",
                                   best_x, best_inf);
    }
    if (norm_inf(r) <= opts.residual_tol)
        return {x, norm_inf(r), opts.max_iterations};
    throw ConvergenceError("solve_least_squares: iteration limit reached", best_x,
                           best_inf);
}

namespace {

struct SimpsonWork {
    const std::function<double(double)>* f;
    long subdivisions = 0;
    bool depth_exceeded = false;
    double abs_mass = 0.0;  // sum of |local integral| over accepted leaves
};

double eval_checked(SimpsonWork& w, double x) {
    const double v = (*w.f)(x);
    if (!std::isfinite(v))
        throw EvaluationError("integrate_adaptive: non-finite integrand value");
    return v;
}

double simpson(double fa, double fm, double fb, double h6) {
    return h6 * (fa + 4.0 * fm + fb);
}

double adapt(SimpsonWork& w, double a, double b, double fa, double fm, double fb,
             double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = eval_checked(w, 0.5 * (a + m));
    const double rm = eval_checked(w, 0.5 * (m + b));
    const double left = simpson(fa, lm, fm, (m - a) / 6.0);
    const double right = simpson(fm, rm, fb, (b - m) / 6.0);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol) {
        w.abs_mass += std::fabs(left) + std::fabs(right);
        return left + right + delta / 15.0;
    }
    if (depth <= 0) {
        w.depth_exceeded = true;
        return left + right + delta / 15.0;
    }
    w.subdivisions++;
    // floor the per-half tolerance at the roundoff scale of the local sum so
    // sharp peaks cannot demand sub-eps agreement
    const double tol_half =
        std::max(0.5 * tol, 0.25 * std::numeric_limits<double>::epsilon() *
                                std::fabs(left + right));
    return adapt(w, a, m, fa, lm, fm, left, tol_half, depth - 1) +
           adapt(w, m, b, fm, rm, fb, right, tol_half, depth - 1);
}

}  // namespace

QuadratureResult integrate_adaptive_ex(const std::function<double(double)>& f,
                                       double a, double b, double tol) {
    if (!(tol > 0)) throw DomainError("integrate_adaptive: tol must be positive");
    if (a == b) return {0.0, 0};
    SimpsonWork w{&f};
    const double fa = eval_checked(w, a);
    const double fm = eval_checked(w, 0.5 * (a + b));
    const double fb = eval_checked(w, b);
    const double whole = simpson(fa, fm, fb, (b - a) / 6.0);
    const double v = adapt(w, a, b, fa, fm, fb, whole, tol, 48);
    if (w.depth_exceeded)
        throw AccuracyError("integrate_adaptive: tolerance not met at max depth");
    if (tol < 0.5 * std::numeric_limits<double>::epsilon() * w.abs_mass)
        throw AccuracyError("integrate_adaptive: tol below the roundoff floor");
    return {v, w.subdivisions};
}

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol) {
    return integrate_adaptive_ex(f, a, b, tol).value;
}

double fd_derivative(const std::function<double(double)>& f, double x, double h,
                     int order) {
    if (!(h > 0)) throw DomainError("fd_derivative: h must be positive");
    if (order != 1 && order != 2) throw DomainError("fd_derivative: order must be 1 or 2");

    auto stencil = [&](double step) {
        if (order == 1) return (f(x + step) - f(x - step)) / (2.0 * step);
        return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step);
    };
    const double d1 = stencil(h);
    const double d2 = stencil(0.5 * h);
    const double v = (4.0 * d2 - d1) / 3.0;
    if (!std::isfinite(v))
        throw EvaluationError("fd_derivative: non-finite sample");
    return v;
}

}  // namespace scherk::numerics
