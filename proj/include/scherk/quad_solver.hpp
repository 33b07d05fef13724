#pragma once

// Numerical realization of the inscribed-quadrilateral Beltrami problem:
// given w in the disk, solve for the quadrilateral Q(w) and the harmonic map
// whose second dilatation is the Blaschke square q_w^2, then evaluate the
// centre curvature and scan the Heinz/Hopf candidate constants.

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "scherk/errors.hpp"

namespace scherk::quad {

using Complex = std::complex<double>;

// Unknowns of the problem: preimage jump angles alpha (b_k = e^{i alpha_k})
// and vertex angles theta (a_k = e^{i theta_k}).  The boundary function takes
// the value a_k on the arc ending at alpha_k, so f_z = sum d_k / (z - b_k)
// with d_k = (a_k - a_{k+1}) / (2 pi i).
//
// Canonical form: alpha strictly increasing in [0, 2pi); theta strictly
// increasing with theta[0] in [0, 2pi) (later entries may exceed 2pi), and
// Re f_z(0) > 0.
struct QuadConfig {
    Complex w{0.0, 0.0};
    std::array<double, 4> alpha{};
    std::array<double, 4> theta{};

    Complex vertex(int k) const;       // a_k
    Complex preimage(int k) const;     // b_k
    Complex residue(int k) const;      // d_k
    Complex fz0() const;               // f_z(0) = -sum d_k / b_k
    Complex boundary_average() const;  // f(0) of the step extension
};

// Target second dilatation q_w(z) = (w + mu z)/(1 + conj(w) mu z) with the
// unimodular factor mu = i (1 - w^4)/|1 - w^4|.
struct DilatationTarget {
    Complex w;
    Complex mu;
    Complex q(Complex z) const;
};

DilatationTarget target_dilatation(Complex w);

struct RationalEW {
    Complex fz;       // f_z
    Complex gprime;   // conj(f_zbar) = -sum conj(d_k)/(z - b_k)
};

RationalEW rational_ew(const QuadConfig& config, Complex z);

// Residual whose zero set characterizes solutions: real/imaginary parts of
// the coefficients of R(z) = A(z)(1 + conj(w) mu z)^2 - (w + mu z)^2 B(z)
// with A = gprime * prod(z - b_k), B = fz * prod(z - b_k), followed by
// Re f(0), Im f(0) and Im f_z(0).  15 entries.
std::vector<double> residual(const QuadConfig& config);

double residual_inf(const QuadConfig& config);

// The closed-form family transported to the solver's coordinates: solves the
// problem for w = i * a_of_t(t).  Returned canonicalized.
QuadConfig trapezoid_seed(double t);

// Index-rotates and gauge-fixes a config into canonical form.
QuadConfig canonicalize(QuadConfig config);

// Max deviation between two canonical configs (angles compared mod 2pi,
// |w| difference included).
double config_distance(const QuadConfig& a, const QuadConfig& b);

struct SolveResult {
    QuadConfig config;
    double residual_inf = 0.0;
    int lm_iterations = 0;
    int continuation_steps = 0;
};

inline constexpr double kWCap = 0.95;

// Damped least-squares solve for the configuration at w.  Without a seed,
// starts from trapezoid_seed at the matching |w| and walks w along a straight
// segment with step halving on failure.
SolveResult solve_quad(Complex w, std::optional<QuadConfig> seed = std::nullopt);

struct CentreCurvature {
    double gauss = 0.0;  // K = -4 (1-|w|^2)^2 / ((1+|w|^2)^4 |f_z(0)|^2)
    double hopf = 0.0;   // W^2 |K| = 4 / ((1+|w|^2)^2 |f_z(0)|^2)
};

CentreCurvature centre_curvature(const QuadConfig& config);

struct ScanCell {
    Complex w;
    double c0 = 0.0;  // |K| candidate
    double c1 = 0.0;  // W^2 |K| candidate
    bool converged = false;
};

struct ScanResult {
    int grid_n = 0;
    double r_max = 0.0;
    std::vector<ScanCell> cells;  // ring-major: index = ring * grid_n + angle
    double c0_max = 0.0;
    double c1_max = 0.0;
    Complex argmax_c0;
    Complex argmax_c1;
    int failures = 0;
};

// Polar-grid scan of the Heinz/Hopf candidates, continued ring by ring from
// the centre outward.  Cells within a ring are independent given the previous
// ring, so they may be solved by a worker pool (n_threads <= 0 picks the
// hardware count; the SCHERK_THREADS cap is applied by callers).
ScanResult heinz_hopf_scan(int grid_n, double r_max, int n_threads = 0);

}  // namespace scherk::quad
