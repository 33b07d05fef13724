#include "scherk/family.hpp"

#include <algorithm>
#include <cmath>

#include "scherk/numerics.hpp"

namespace scherk::family {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI{0.0, 1.0};

void check_t(double t) {
    if (!(t > 0.0) || t > kPi / 2 + 1e-14)
        throw DomainError("family: t must lie in (0, pi/2]");
}

double s_of_t(double t) {
    // Algebraically arccos((3cos t - 1)/(1 + cos t)); evaluated through the
    // half-angle identity cos(s/2) = sqrt(cos t)/cos(t/2), which keeps full
    // accuracy near t = pi/2 where the arccos argument rounds into -1.
    const double arg = std::clamp(std::sqrt(std::cos(t)) / std::cos(t / 2), 0.0, 1.0);
    return kPi - 2.0 * std::asin(arg);
}

}  // namespace

double t_critical() {
    return 2.0 * std::atan(std::sqrt(0.5 * (std::sqrt(5.0) - 1.0)));
}

double mobius_param(double t) {
    check_t(t);
    return std::sqrt(std::cos(t)) / (std::cos(t / 2) + std::sin(t / 2));
}

bool TrapezoidFamilyParam::contains(Complex point, double margin) const {
    // Vertices are in counterclockwise order; inside means left of every edge.
    for (int k = 0; k < 4; ++k) {
        const Complex a = vertices[k];
        const Complex b = vertices[(k + 1) % 4];
        const Complex e = b - a, w = point - a;
        if (e.real() * w.imag() - e.imag() * w.real() <= margin) return false;
    }
    return true;
}

TrapezoidFamilyParam trapezoid_geometry(double t) {
    check_t(t);
    TrapezoidFamilyParam g;
    g.t = t;
    g.s = s_of_t(t);
    g.tau = 0.5 * (t + g.s - kPi);
    g.t_critical = t_critical();
    const Complex rot = std::exp(-kI * g.tau);
    const double angles[4] = {0.0, t, g.s, t + g.s};
    for (int k = 0; k < 4; ++k)
        g.vertices[k] = rot * std::exp(kI * angles[k]);
    return g;
}

Complex map_point(double t, Complex z) {
    check_t(t);
    if (std::abs(z) >= 1.0) throw DomainError("map_point: |z| must be < 1");
    const double s = s_of_t(t);
    // u = -(1/pi) Im[ log((1+z^2)/(1+z)^2) sin((s-t)/2)
    //               + log((1-z)^2/(1+z^2)) sin((s+t)/2) ],
    // all factors stay in the right half plane for |z| < 1, so the principal
    // branch never crosses the cut.
    const Complex log_a = std::log(1.0 + z * z) - 2.0 * std::log(1.0 + z);
    const Complex log_b = 2.0 * std::log(1.0 - z) - std::log(1.0 + z * z);
    const double u = -(log_a.imag() * std::sin(0.5 * (s - t)) +
                       log_b.imag() * std::sin(0.5 * (s + t))) / kPi;
    const double v =
        -4.0 * std::atan(z).real() * std::sin(0.5 * s) * std::sin(0.5 * t) / kPi;
    return Complex{u, v} + kI * std::sqrt(std::cos(t));
}

Complex poisson_oracle(double t, Complex z, double tol) {
    check_t(t);
    if (std::abs(z) > 0.999) throw DomainError("poisson_oracle: |z| must be <= 0.999");
    if (!(tol > 0)) throw DomainError("poisson_oracle: tol must be positive");

    const double s = s_of_t(t);
    const double tau = 0.5 * (t + s - kPi);
    const Complex values[4] = {Complex{1.0, 0.0}, std::exp(kI * t), std::exp(kI * s),
                               std::exp(kI * (t + s))};
    const double r = std::abs(z);
    const double phase = (r == 0.0) ? 0.0 : std::arg(z);
    const double one_minus_r = 1.0 - r;

    Complex f1{0.0, 0.0};
    for (int k = 0; k < 4; ++k) {
        const double a = k * kPi / 2, b = (k + 1) * kPi / 2;
        // denominator written as (1-r)^2 + 4r sin^2(x/2): no cancellation at
        // the kernel peak, which the adaptive rule otherwise cannot resolve
        // past ~1e-8 for r near 1
        const auto kernel = [&](double sigma) {
            const double sh = std::sin(0.5 * (phase - sigma));
            return one_minus_r * (1.0 + r) /
                   (one_minus_r * one_minus_r + 4.0 * r * sh * sh);
        };
        const double harm =
            numerics::integrate_adaptive(kernel, a, b, tol / 8.0) / (2.0 * kPi);
        f1 += values[k] * harm;
    }
    return std::exp(-kI * tau) * f1;
}

EWSample ew_data(double t, Complex z) {
    check_t(t);
    const Complex z4 = z * z * z * z;
    if (std::abs(z4 - 1.0) < 1e-12) throw PoleError("ew_data: pole at z^4 = 1");
    const double c = std::cos(t);
    const double cs = std::cos(t / 2) + std::sin(t / 2);
    const double a = std::sqrt(c) / cs;
    EWSample e;
    e.z = z;
    const Complex one_plus_za = 1.0 + z * a;
    e.p = -2.0 * kI * cs * std::sin(t) * one_plus_za * one_plus_za /
          (kPi * (1.0 - z4) * (1.0 + c));
    e.q = (z + a) / one_plus_za;
    e.qprime = (1.0 - a * a) / (one_plus_za * one_plus_za);
    return e;
}

PreRotationEW prerotation_ew(double t, Complex z) {
    check_t(t);
    const double s = s_of_t(t);
    const Complex verts[5] = {Complex{1.0, 0.0}, std::exp(kI * t), std::exp(kI * s),
                              std::exp(kI * (t + s)), Complex{1.0, 0.0}};
    PreRotationEW out{Complex{0, 0}, Complex{0, 0}};
    Complex pole = kI;  // i^k for k = 1..4
    for (int k = 0; k < 4; ++k) {
        const Complex delta = verts[k] - verts[k + 1];
        if (std::abs(z - pole) < 1e-12)
            throw PoleError("prerotation_ew: z at a boundary jump point");
        out.gprime += delta / (z - pole);
        out.hprime += std::conj(delta) / (z - pole);
        pole *= kI;
    }
    const Complex inv2pii = 1.0 / (2.0 * kPi * kI);
    out.gprime *= inv2pii;
    out.hprime *= inv2pii;
    return out;
}

Complex prerotation_q(double t, Complex z) {
    const double s = s_of_t(t);
    const double mu = -0.5 * (t + s - kPi);
    const double a = mobius_param(t);
    return std::exp(kI * mu) * (z + a) / (1.0 + z * a);
}

double height(double t, Complex z) {
    check_t(t);
    if (std::abs(z) >= 1.0) throw DomainError("height: |z| must be < 1");
    const Complex z2 = z * z;
    const double d1 = std::abs(1.0 - z2), d2 = std::abs(1.0 + z2);
    const double e1 = std::abs(1.0 + z), e2 = std::abs(1.0 - z);
    if (d1 < 1e-300 || d2 < 1e-300 || e1 < 1e-300 || e2 < 1e-300)
        throw PoleError("height: divergent at z^4 = 1");
    const double c = std::cos(t);
    return 2.0 / kPi *
           (std::sin(t / 2) * std::log(d1 / d2) -
            std::sqrt(c) * std::tan(t / 2) * std::log(e1 / e2));
}

double z_center(double t) {
    check_t(t);
    const double c = std::cos(t);
    const double arg =
        kPi / 8 * std::sqrt(c) * std::sin(t) / std::pow(std::sin(t / 2), 3);
    const double r = std::tan(arg);
    if (r > 1.0 + 1e-9)
        throw DomainError("z_center: preimage lies outside the disk (t < t_critical)");
    return std::min(r, 1.0);
}

double kappa(double t) {
    const double r = z_center(t);  // also validates the range
    const double C = std::cos(t / 2);
    const double c = std::cos(t);
    const double den = (1.0 + r * r) * C + 2.0 * r * std::sqrt(c);
    return kPi * (1.0 - r * r * r * r) * C / (2.0 * den * den);
}

double a_of_t(double t) {
    const double r = z_center(t);
    const double m = mobius_param(t);
    return (r + m) / (1.0 + r * m);
}

double phi_of_u(double u) {
    if (!(u > 0.0) || u > 1.0 + 1e-14)
        throw DomainError("phi_of_u: u must lie in (0, 1]");
    const double root = std::sqrt(std::max(0.0, 1.0 - u * u));
    const double arg = kPi * root / (2.0 * u * u);
    const double den = 1.0 + root * std::sin(arg);
    return kPi * std::sqrt(1.0 + u * u) * std::cos(arg) / (2.0 * den * den);
}

InequalityProfile inequality_profile(double t) {
    if (!(t > t_critical()) || t > kPi / 2 + 1e-14)
        throw DomainError("inequality_profile: t must lie in (t_critical, pi/2]");
    const double c = std::cos(t);
    const double S = std::sin(t / 2), C = std::cos(t / 2);
    const double two_a = kPi / 4 * std::sqrt(c) * std::sin(t) / (S * S * S);
    InequalityProfile out;
    out.Phi = phi_of_u(std::tan(t / 2));
    out.phi = kPi * (C / S) / (2.0 * C + 2.0 * std::sqrt(c) * std::sin(two_a));
    out.psi = S + std::sqrt(c) * std::sin(two_a) * (S / C);
    out.vartheta = C * C / S;
    return out;
}

double psi_of_theta(double theta) {
    if (theta < 0.0 || theta > kPi / 2 + 1e-14)
        throw DomainError("psi_of_theta: theta must lie in [0, pi/2]");
    const double target = std::tan(0.5 * std::min(theta, kPi / 2));
    const double lo = t_critical(), hi = kPi / 2;
    const double a_hi = a_of_t(hi);  // ~0 up to roundoff in cos(pi/2)
    if (target <= a_hi) {
        const double k = kappa(hi);
        return k * k;
    }
    if (target >= a_of_t(lo)) {  // attainable max is ~1 - 1e-12
        const double k = kappa(lo);
        return k * k;
    }
    // a_of_t decreases from 1 to ~0 on [t_critical, pi/2].
    const double t_star = numerics::find_root_bisect(
        [&](double t) { return a_of_t(t) - target; },
        numerics::RootBracket{lo, hi, 1e-13});
    const double k = kappa(t_star);
    return k * k;
}

}  // namespace scherk::family
