#pragma once

// The one-parameter family S^t of Scherk-type minimal graphs over isosceles
// trapezoids inscribed in the unit circle, parameterized by the vertex angle
// t in (0, pi/2].  The planar part is the harmonic extension of a four-step
// boundary function; the Enneper-Weierstrass data (p, q) are explicit
// rational/Moebius expressions in z, and all curvature quantities at the
// centre z_center(t) have closed forms.

#include <array>
#include <complex>

#include "scherk/errors.hpp"

namespace scherk::family {

using Complex = std::complex<double>;

// Vertex angle t with its derived geometry.  The trapezoid has vertices
// e^{-i tau} * {1, e^{it}, e^{is}, e^{i(t+s)}} on the unit circle, bases
// parallel to the real axis.
struct TrapezoidFamilyParam {
    double t = 0.0;
    double s = 0.0;            // second vertex angle, arccos((3cos t - 1)/(1 + cos t))
    double tau = 0.0;          // rotation (t + s - pi)/2 that levels the bases
    double t_critical = 0.0;   // family threshold 2*atan(sqrt((sqrt 5 - 1)/2))
    std::array<Complex, 4> vertices{};

    // True iff the point lies strictly inside the (convex) trapezoid.
    bool contains(Complex point, double margin = 0.0) const;
};

// Enneper-Weierstrass data of S^t at a point z of the disk:
// p = f_z, q = (z + a)/(1 + a z) with the real Moebius parameter
// a = sqrt(cos t)/(cos(t/2) + sin(t/2)), qprime its derivative.
struct EWSample {
    Complex z;
    Complex p;
    Complex q;
    Complex qprime;
};

struct InequalityProfile {
    double Phi;       // kappa expressed in u = tan(t/2)
    double phi;       // W * kappa
    double psi;       // pi / (2 phi)
    double vartheta;  // cos(t/2) * cot(t/2), lower bound for psi
};

// Threshold angle t where the centre z_center reaches the boundary:
// 2*atan(sqrt((sqrt 5 - 1)/2)) ~= 1.33248.
double t_critical();

// Moebius parameter a(t) = sqrt(cos t)/(cos(t/2) + sin(t/2)) of q.
double mobius_param(double t);

// Derived trapezoid geometry for t in (0, pi/2].
TrapezoidFamilyParam trapezoid_geometry(double t);

// Closed-form harmonic map f(z) = u(z) + i v(z) + i sqrt(cos t) of the disk
// onto the trapezoid; |z| < 1.
Complex map_point(double t, Complex z);

// Independent oracle for map_point: rotated Poisson integral of the step
// boundary function, integrated per arc (split exactly at multiples of pi/2)
// to the requested tolerance.  |z| <= 0.999.
Complex poisson_oracle(double t, Complex z, double tol = 1e-9);

// Enneper-Weierstrass data at z (z^4 != 1).
EWSample ew_data(double t, Complex z);

// Pre-rotation rational derivatives of the step-function harmonic extension
// f1 = P[F]: gprime = (f1)_z, hprime = conj((f1)_zbar).  Exposed for the
// omega1 = q1^2 cross-checks.
struct PreRotationEW {
    Complex gprime;
    Complex hprime;
};
PreRotationEW prerotation_ew(double t, Complex z);

// q before rotation: q1 = e^{i mu} (z + a)/(1 + a z) with mu = -tau.
Complex prerotation_q(double t, Complex z);

// Third Enneper-Weierstrass coordinate T(z), normalized so T(0) = 0 and
// signed so that T -> +inf as z -> +-i and T -> -inf as z -> +-1.
double height(double t, Complex z);

// Disk preimage of the planar origin, tan((pi/8) sqrt(cos t) csc^3(t/2) sin t);
// in [0, 1] for t in [t_critical, pi/2], outside the disk below t_critical.
double z_center(double t);

// Centre curvature scale: the Gaussian curvature of S^t above the origin is
// -kappa(t)^2.  Increasing on [t_critical, pi/2] with kappa(pi/2) = pi/sqrt 2.
double kappa(double t);

// |q(z_center(t))|: the Moebius image of z_center, decreasing from 1 to 0 on
// [t_critical, pi/2].  Determines the normal direction at the centre.
double a_of_t(double t);

// The monotonicity-scan quantities of the kappa <= pi/sqrt 2 argument.
InequalityProfile inequality_profile(double t);

// Phi(u): kappa as a function of u = tan(t/2), used by the slope scan on
// u in (sqrt((sqrt 5 - 1)/2), 1).
double phi_of_u(double u);

// Decreasing diffeomorphism Psi: [0, pi/2] -> [0, pi^2/2] mapping the
// tangent-plane angle theta to the extremal squared curvature kappa^2(t*)
// where a_of_t(t*) = tan(theta/2).
double psi_of_theta(double theta);

}  // namespace scherk::family
