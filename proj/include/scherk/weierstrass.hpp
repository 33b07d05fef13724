#pragma once

// Surface-level Enneper-Weierstrass machinery: curvature, unit normal,
// slopes, mixed second derivative, minimal-surface-equation residual,
// surface sampling and symmetric-point checks.

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "scherk/errors.hpp"

namespace scherk::weier {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

// One sampled point of a minimal graph.
struct SurfaceSample {
    Complex z;
    Vec3 position{};  // (u, v, T)
    Vec3 normal{};    // upward unit normal
    double f_u = 0.0;
    double f_v = 0.0;
    double W = 1.0;          // sqrt(1 + f_u^2 + f_v^2)
    double curvature = 0.0;  // Gaussian curvature, <= 0
};

// Gaussian curvature from the Enneper-Weierstrass parameters,
// K = -4|q'|^2 / (|p|^2 (1+|q|^2)^4).  Internally cross-checked against the
// (h', g', omega) form when q != 0.
double curvature(Complex p, Complex q, Complex qprime);

// Upward unit normal -(1/(1+|q|^2)) (2 Im q, 2 Re q, |q|^2 - 1).
Vec3 unit_normal(Complex q);

// Graph slopes at the point with Gauss-map value q = a + ib:
// f_u = 2b/(1 - |q|^2), f_v = 2a/(1 - |q|^2).
std::pair<double, double> slopes(Complex q);

// W = (1+|q|^2)/(1-|q|^2) = sqrt(1 + f_u^2 + f_v^2).
double w_factor(Complex q);

// Mixed second derivative of the graph function,
// f_uv = 2 Re[p (1 - q^4) conj(q')] / (|p|^2 (1-|q|^2)^3 (1+|q|^2)).
double mixed_second(Complex p, Complex q, Complex qprime);

struct SecondDerivatives {
    double f_uu = 0.0;
    double f_uv = 0.0;
    double f_vv = 0.0;
    double mse_residual = 0.0;       // minimal-surface-equation defect
    double consistency_defect = 0.0; // residual of the 4x3 least-squares solve
};

// Recovers (f_uu, f_uv, f_vv) of S^t at z by central-difference
// differentiation (step h) of the analytic slope and planar-map fields in
// both parameter directions, solved as an overdetermined 4x3 system.
SecondDerivatives second_derivatives(double t, Complex z, double h = 1e-4);

// Full sample of S^t at z: position from map_point/height, pointwise data
// from ew_data.
SurfaceSample surface_point(double t, Complex z);

// Sampled surface with triangulated faces.
struct Mesh {
    double t = 0.0;
    int n_r = 0;
    int n_theta = 0;
    double r_max = 0.0;
    double t_cap = 0.0;
    long clamp_count = 0;
    std::vector<Vec3> vertices;                // ring-major polar order
    std::vector<std::array<int, 3>> faces;     // 0-based triangles
};

// Polar-grid mesh of S^t; heights clamped to |T| <= t_cap.
Mesh sample_mesh(double t, int n_r, int n_theta, double r_max, double t_cap);

// A graph surface with analytic value, gradient and Hessian.
struct ClosedFormSurface {
    std::string kind;
    std::function<double(double, double)> value;
    std::function<std::pair<double, double>(double, double)> gradient;
    // (f_uu, f_uv, f_vv)
    std::function<std::array<double, 3>(double, double)> hessian;
};

ClosedFormSurface catenoid();       // arccosh(sqrt(u^2+v^2)), valid for r > 1
ClosedFormSurface scherk_saddle();  // log(cos v / cos u)
ClosedFormSurface helicoid();       // atan(v/u), valid for u != 0
ClosedFormSurface scherk_family_surface(double t);  // S^t over its trapezoid

// Newton inversion of the planar map of S^t: finds z with map_point(t,z) = w.
Complex invert_planar(double t, Complex w, Complex z_start);

struct SymmetryCheck {
    bool is_symmetric = false;
    double grad_h = 0.0;     // directional derivative along h
    double hess_h_ih = 0.0;  // second derivative in the (h, ih) pair
};

// Checks the symmetric-point condition grad_h f = 0, Hess(h, ih) f = 0 at
// zeta for the direction h = e^{ic}.
SymmetryCheck symmetric_point_check(const ClosedFormSurface& surface,
                                    Complex zeta, Complex direction,
                                    double tol);

// Scans n_dirs equally spaced directions; true iff some direction passes.
bool has_symmetric_direction(const ClosedFormSurface& surface, Complex zeta,
                             int n_dirs, double tol);

}  // namespace scherk::weier
