#pragma once

// Closed-form curvature bound functions and reproduction of the extremal
// constants: the Hall chain, the G/H crossing point r_diamond and the
// improved |f_z(0)| lower bound.

#include <complex>

#include "scherk/errors.hpp"

namespace scherk::bounds {

struct BoundsReport {
    double finn_osserman = 0.0;   // pi^2/2
    double hall = 0.0;            // 16 pi^2/27
    double r_diamond = 0.0;       // root of G = H
    double g_at_r_diamond = 0.0;  // G(r_diamond) ~ 5.6918
    double hopf_value = 0.0;      // (16 pi^2/27)(1+r^4)/(1+r^2)^2 ~ 5.79608
};

// (16 pi^2/27) (1-r^2)^2 (1+r^4) / (1+r^2)^4 evaluated at r = |q(0)|.
double hall_chain(double q0_abs);

struct GH {
    double G = 0.0;
    double H = 0.0;
    double min_GH = 0.0;
};

// G (the curvature bound from Hall's estimate) and H (the bound from the
// improved |f_z(0)| inequality with the harmonic Schwarz lemma).
GH bound_functions(double r);

// Reproduces the crossing point and the derived constants by bisection on
// G - H over [0.01, 0.5].
BoundsReport corollary_constants();

// Harmonic Schwarz lemma bound (4/pi) atan r.
double schwarz_harmonic(double r);

// |f_z(0)| >= (2 sqrt 2 / pi) (1 - |f(-w e^{-is})|) / (1 - |w|^2).
double fz0_improved_bound(std::complex<double> w,
                          std::complex<double> f_at_reflected);

}  // namespace scherk::bounds
