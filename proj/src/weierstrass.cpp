#include "scherk/weierstrass.hpp"

#include <cmath>

#include "scherk/family.hpp"
#include "scherk/numerics.hpp"

namespace scherk::weier {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_q(Complex q) {
    if (std::abs(q) >= 1.0) throw DomainError("weier: |q| must be < 1");
}

// phi_1 = p(1+q^2), phi_2 = -i p(1-q^2); planar Jacobian entries follow from
// u_x - i u_y = phi_1, v_x - i v_y = phi_2.
struct PlanarJacobian {
    double u_x, u_y, v_x, v_y;
};

PlanarJacobian planar_jacobian(const family::EWSample& e) {
    const Complex phi1 = e.p * (1.0 + e.q * e.q);
    const Complex phi2 = Complex{0.0, -1.0} * e.p * (1.0 - e.q * e.q);
    return {phi1.real(), -phi1.imag(), phi2.real(), -phi2.imag()};
}

// Solves the overdetermined 4x3 system rows * (f_uu, f_uv, f_vv) = rhs in
// least squares; returns the solution and the residual 2-norm.
std::pair<std::array<double, 3>, double> solve_4x3(
    const std::array<std::array<double, 3>, 4>& rows,
    const std::array<double, 4>& rhs) {
    std::vector<double> ata(9, 0.0), atb(3, 0.0);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 3; ++j) {
            atb[j] += rows[i][j] * rhs[i];
            for (int k = 0; k < 3; ++k)
                ata[j * 3 + k] += rows[i][j] * rows[i][k];
        }
    }
    std::vector<double> x;
    try {
        x = numerics::solve_dense(ata, atb);
    } catch (const ConditioningError&) {
        throw ConditioningError("second_derivatives: near-singular local system");
    }
    double defect = 0.0;
    for (int i = 0; i < 4; ++i) {
        double r = -rhs[i];
        for (int j = 0; j < 3; ++j)
            r += rows[i][j] * x[j];
        defect += r * r;
    }
    return {{x[0], x[1], x[2]}, std::sqrt(defect)};
}

}  // namespace

double curvature(Complex p, Complex q, Complex qprime) {
    if (std::abs(p) < 1e-300)
        throw DegeneracyError("curvature: p = 0 degenerates the parameterization");
    check_q(q);
    const double p2 = std::norm(p);
    const double q2 = std::norm(q);
    const double den = (1.0 + q2) * (1.0 + q2);
    const double value = -4.0 * std::norm(qprime) / (p2 * den * den);
    if (std::abs(q) > 0.0) {
        // (h', g', omega) route: omega = q^2, omega' = 2 q q', g' = p q^2.
        const Complex omega_prime = 2.0 * q * qprime;
        const double hg = std::abs(p * (p * q * q));
        const double om = std::abs(q * q);
        const double alt = -std::norm(omega_prime) / (hg * std::pow(1.0 + om, 4));
        if (std::abs(alt - value) > 1e-12 * std::max(1.0, std::abs(value)))
            throw Error("curvature: the two formula routes disagree");
    }
    return value;
}

Vec3 unit_normal(Complex q) {
    check_q(q);
    const double n2 = std::norm(q);
    const double inv = 1.0 / (1.0 + n2);
    return {-2.0 * q.imag() * inv, -2.0 * q.real() * inv, (1.0 - n2) * inv};
}

std::pair<double, double> slopes(Complex q) {
    const double n2 = std::norm(q);
    if (n2 >= 1.0) throw PoleError("slopes: pole at |q| = 1");
    const double inv = 1.0 / (1.0 - n2);
    return {2.0 * q.imag() * inv, 2.0 * q.real() * inv};
}

double w_factor(Complex q) {
    check_q(q);
    const double n2 = std::norm(q);
    return (1.0 + n2) / (1.0 - n2);
}

double mixed_second(Complex p, Complex q, Complex qprime) {
    if (std::abs(p) < 1e-300) throw DegeneracyError("mixed_second: p = 0");
    const double n2 = std::norm(q);
    if (n2 >= 1.0) throw DegeneracyError("mixed_second: |q| = 1");
    const Complex q4 = q * q * q * q;
    const double num = 2.0 * (p * (1.0 - q4) * std::conj(qprime)).real();
    const double den = std::norm(p) * std::pow(1.0 - n2, 3) * (1.0 + n2);
    return num / den;
}

SecondDerivatives second_derivatives(double t, Complex z, double h) {
    if (!(h >= 1e-5 && h <= 1e-2))
        throw DomainError("second_derivatives: h must lie in [1e-5, 1e-2]");

    const auto slope_at = [&](Complex zz) { return slopes(family::ew_data(t, zz).q); };
    const auto map_at = [&](Complex zz) { return family::map_point(t, zz); };

    const Complex dx{h, 0.0}, dy{0.0, h};
    const auto [fu_px, fv_px] = slope_at(z + dx);
    const auto [fu_mx, fv_mx] = slope_at(z - dx);
    const auto [fu_py, fv_py] = slope_at(z + dy);
    const auto [fu_my, fv_my] = slope_at(z - dy);
    const Complex w_px = map_at(z + dx), w_mx = map_at(z - dx);
    const Complex w_py = map_at(z + dy), w_my = map_at(z - dy);

    const double inv2h = 1.0 / (2.0 * h);
    const double dfu_dx = (fu_px - fu_mx) * inv2h, dfv_dx = (fv_px - fv_mx) * inv2h;
    const double dfu_dy = (fu_py - fu_my) * inv2h, dfv_dy = (fv_py - fv_my) * inv2h;
    const double u_x = (w_px - w_mx).real() * inv2h, v_x = (w_px - w_mx).imag() * inv2h;
    const double u_y = (w_py - w_my).real() * inv2h, v_y = (w_py - w_my).imag() * inv2h;

    const double det = u_x * v_y - u_y * v_x;
    const double scale = u_x * u_x + u_y * u_y + v_x * v_x + v_y * v_y;
    if (std::abs(det) < 1e-12 * scale)
        throw ConditioningError("second_derivatives: planar map nearly singular");

    // d/dx f_u = f_uu u_x + f_uv v_x, etc.
    const std::array<std::array<double, 3>, 4> rows = {{{u_x, v_x, 0.0},
                                                        {0.0, u_x, v_x},
                                                        {u_y, v_y, 0.0},
                                                        {0.0, u_y, v_y}}};
    const std::array<double, 4> rhs = {dfu_dx, dfv_dx, dfu_dy, dfv_dy};
    const auto [sol, defect] = solve_4x3(rows, rhs);

    SecondDerivatives out;
    out.f_uu = sol[0];
    out.f_uv = sol[1];
    out.f_vv = sol[2];
    out.consistency_defect = defect;
    const auto [fu, fv] = slope_at(z);
    out.mse_residual = (1.0 + fu * fu) * out.f_vv - 2.0 * fu * fv * out.f_uv +
                       (1.0 + fv * fv) * out.f_uu;
    return out;
}

SurfaceSample surface_point(double t, Complex z) {
    if (std::abs(z) > 0.999) throw DomainError("surface_point: |z| must be <= 0.999");
    const family::EWSample e = family::ew_data(t, z);
    const Complex w = family::map_point(t, z);
    SurfaceSample s;
    s.z = z;
    s.position = {w.real(), w.imag(), family::height(t, z)};
    s.normal = unit_normal(e.q);
    std::tie(s.f_u, s.f_v) = slopes(e.q);
    s.W = w_factor(e.q);
    s.curvature = curvature(e.p, e.q, e.qprime);
    return s;
}

Mesh sample_mesh(double t, int n_r, int n_theta, double r_max, double t_cap) {
    if (n_r < 2 || n_theta < 2) throw DomainError("sample_mesh: need n_r, n_theta >= 2");
    if (!(r_max > 0.0) || r_max > 0.999)
        throw DomainError("sample_mesh: r_max must lie in (0, 0.999]");
    if (!(t_cap > 0.0)) throw DomainError("sample_mesh: t_cap must be positive");

    Mesh m;
    m.t = t;
    m.n_r = n_r;
    m.n_theta = n_theta;
    m.r_max = r_max;
    m.t_cap = t_cap;
    m.vertices.reserve(static_cast<std::size_t>(n_r) * n_theta);
    for (int i = 0; i < n_r; ++i) {
        const double r = r_max * (i + 1) / n_r;
        for (int j = 0; j < n_theta; ++j) {
            const double th = 2.0 * kPi * j / n_theta;
            const Complex z = std::polar(r, th);
            const Complex w = family::map_point(t, z);
            double T = family::height(t, z);
            if (T > t_cap) {
                T = t_cap;
                m.clamp_count++;
            } else if (T < -t_cap) {
                T = -t_cap;
                m.clamp_count++;
            }
            m.vertices.push_back({w.real(), w.imag(), T});
        }
    }
    for (int i = 0; i + 1 < n_r; ++i) {
        for (int j = 0; j < n_theta; ++j) {
            const int jn = (j + 1) % n_theta;
            const int a = i * n_theta + j;
            const int b = i * n_theta + jn;
            const int c = (i + 1) * n_theta + jn;
            const int d = (i + 1) * n_theta + j;
            m.faces.push_back({a, b, c});
            m.faces.push_back({a, c, d});
        }
    }
    return m;
}

ClosedFormSurface catenoid() {
    ClosedFormSurface s;
    s.kind = "catenoid";
    auto rho = [](double u, double v) { return std::sqrt(u * u + v * v); };
    s.value = [rho](double u, double v) {
        const double r = rho(u, v);
        if (r <= 1.0) throw DomainError("catenoid: needs u^2 + v^2 > 1");
        return std::acosh(r);
    };
    // w = acosh(rho): w' = 1/sqrt(rho^2-1); chain through rho_u = u/rho.
    auto g = [rho](double u, double v) {
        const double r = rho(u, v);
        return 1.0 / (r * std::sqrt(r * r - 1.0));
    };
    s.gradient = [rho, g](double u, double v) {
        const double r = rho(u, v);
        if (r <= 1.0) throw DomainError("catenoid: needs u^2 + v^2 > 1");
        return std::pair<double, double>{u * g(u, v), v * g(u, v)};
    };
    s.hessian = [rho, g](double u, double v) -> std::array<double, 3> {
        const double r = rho(u, v);
        if (r <= 1.0) throw DomainError("catenoid: needs u^2 + v^2 > 1");
        // d/d rho of g = 1/(rho sqrt(rho^2-1)):
        const double gp = -(2.0 * r * r - 1.0) /
                          (r * r * std::pow(r * r - 1.0, 1.5));
        const double gv = g(u, v);
        const double f_uu = gv + u * u * gp / r;
        const double f_uv = u * v * gp / r;
        const double f_vv = gv + v * v * gp / r;
        return {f_uu, f_uv, f_vv};
    };
    return s;
}

ClosedFormSurface scherk_saddle() {
    ClosedFormSurface s;
    s.kind = "scherk-saddle";
    s.value = [](double u, double v) {
        const double cu = std::cos(u), cv = std::cos(v);
        if (cu <= 0.0 || cv <= 0.0)
            throw DomainError("scherk_saddle: needs |u|, |v| < pi/2");
        return std::log(cv / cu);
    };
    s.gradient = [](double u, double v) {
        return std::pair<double, double>{std::tan(u), -std::tan(v)};
    };
    s.hessian = [](double u, double v) -> std::array<double, 3> {
        const double su = 1.0 / std::cos(u), sv = 1.0 / std::cos(v);
        return {su * su, 0.0, -sv * sv};
    };
    return s;
}

ClosedFormSurface helicoid() {
    ClosedFormSurface s;
    s.kind = "helicoid";
    auto check = [](double u) {
        if (u == 0.0) throw DomainError("helicoid: needs u != 0");
    };
    s.value = [check](double u, double v) {
        check(u);
        return std::atan(v / u);
    };
    s.gradient = [check](double u, double v) {
        check(u);
        const double d = u * u + v * v;
        return std::pair<double, double>{-v / d, u / d};
    };
    s.hessian = [check](double u, double v) -> std::array<double, 3> {
        check(u);
        const double d = u * u + v * v;
        const double d2 = d * d;
        return {2.0 * u * v / d2, (v * v - u * u) / d2, -2.0 * u * v / d2};
    };
    return s;
}

Complex invert_planar(double t, Complex w, Complex z_start) {
    Complex z = z_start;
    double best = 1e300;
    int stalled = 0;
    for (int it = 0; it < 100; ++it) {
        const Complex err = family::map_point(t, z) - w;
        const double mag = std::abs(err);
        if (mag < 5e-16) return z;
        if (mag >= 0.5 * best) {
            if (++stalled >= 3 && best < 1e-12) break;  // at the roundoff floor
        } else {
            stalled = 0;
        }
        best = std::min(best, mag);
        const auto jac = planar_jacobian(family::ew_data(t, z));
        const double det = jac.u_x * jac.v_y - jac.u_y * jac.v_x;
        if (std::abs(det) < 1e-300)
            throw ConditioningError("invert_planar: singular Jacobian");
        const double du = err.real(), dv = err.imag();
        const double step_x = (jac.v_y * du - jac.u_y * dv) / det;
        const double step_y = (-jac.v_x * du + jac.u_x * dv) / det;
        Complex zn = z - Complex{step_x, step_y};
        // keep iterates inside the disk
        if (std::abs(zn) > 0.9995) zn = zn / std::abs(zn) * 0.9995;
        z = zn;
    }
    if (std::abs(family::map_point(t, z) - w) > 1e-10)
        throw ConvergenceError("invert_planar: Newton did not converge",
                               {z.real(), z.imag()},
                               std::abs(family::map_point(t, z) - w));
    return z;
}

ClosedFormSurface scherk_family_surface(double t) {
    ClosedFormSurface s;
    s.kind = "scherk-family";
    const double z0 = family::z_center(t);
    auto locate = [t, z0](double u, double v) {
        return invert_planar(t, Complex{u, v}, Complex{z0, 0.0});
    };
    s.value = [t, locate](double u, double v) {
        return family::height(t, locate(u, v));
    };
    s.gradient = [t, locate](double u, double v) {
        return slopes(family::ew_data(t, locate(u, v)).q);
    };
    s.hessian = [t, locate](double u, double v) -> std::array<double, 3> {
        const Complex z = locate(u, v);
        const family::EWSample e = family::ew_data(t, z);
        const auto jac = planar_jacobian(e);
        // Analytic x/y derivatives of the slope fields via q' = a_x + i b_x.
        const double a = e.q.real(), b = e.q.imag();
        const double a_x = e.qprime.real(), b_x = e.qprime.imag();
        const double a_y = -b_x, b_y = a_x;
        const double D = 1.0 - a * a - b * b;
        const double D2 = D * D;
        const double dfu_dx = (2.0 * (1.0 - a * a + b * b) * b_x + 4.0 * a * b * a_x) / D2;
        const double dfv_dx = (2.0 * (1.0 + a * a - b * b) * a_x + 4.0 * a * b * b_x) / D2;
        const double dfu_dy = (2.0 * (1.0 - a * a + b * b) * b_y + 4.0 * a * b * a_y) / D2;
        const double dfv_dy = (2.0 * (1.0 + a * a - b * b) * a_y + 4.0 * a * b * b_y) / D2;
        const std::array<std::array<double, 3>, 4> rows = {{{jac.u_x, jac.v_x, 0.0},
                                                            {0.0, jac.u_x, jac.v_x},
                                                            {jac.u_y, jac.v_y, 0.0},
                                                            {0.0, jac.u_y, jac.v_y}}};
        const std::array<double, 4> rhs = {dfu_dx, dfv_dx, dfu_dy, dfv_dy};
        return solve_4x3(rows, rhs).first;
    };
    return s;
}

SymmetryCheck symmetric_point_check(const ClosedFormSurface& surface, Complex zeta,
                                    Complex direction, double tol) {
    if (std::abs(direction) < 1e-300)
        throw DomainError("symmetric_point_check: zero direction");
    const double c = std::arg(direction);
    const double u = zeta.real(), v = zeta.imag();
    const auto [f_u, f_v] = surface.gradient(u, v);
    const auto h = surface.hessian(u, v);
    SymmetryCheck out;
    out.grad_h = std::cos(c) * f_u + std::sin(c) * f_v;
    // Hessian as a bilinear form on (h, ih) with h = e^{ic}.
    out.hess_h_ih =
        std::cos(2.0 * c) * h[1] - std::cos(c) * std::sin(c) * (h[0] - h[2]);
    out.is_symmetric = std::abs(out.grad_h) <= tol && std::abs(out.hess_h_ih) <= tol;
    return out;
}

bool has_symmetric_direction(const ClosedFormSurface& surface, Complex zeta,
                             int n_dirs, double tol) {
    for (int k = 0; k < n_dirs; ++k) {
        const double c = 2.0 * kPi * k / n_dirs;
        if (symmetric_point_check(surface, zeta, std::polar(1.0, c), tol).is_symmetric)
            return true;
    }
    return false;
}

}  // namespace scherk::weier
