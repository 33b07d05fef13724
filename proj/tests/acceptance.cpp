// Acceptance suite: one line per criterion, exit code = number of failures.
//
// Criteria (tolerances pinned in code):
//  1. centre-curvature endpoints of the trapezoid family
//  2. monotonicity scans on 1e4-point grids
//  3. closed-form map vs Poisson-integral oracle
//  4. Weierstrass consistency identities
//  5. curvature-bound constants
//  6. quadrilateral-solver oracle equivalence
//  7. Heinz/Hopf scan on a 32x32 polar grid
//  8. the angle-to-curvature diffeomorphism Psi
//  9. symmetric-point demonstrations

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "scherk/bounds.hpp"
#include "scherk/family.hpp"
#include "scherk/quad_solver.hpp"
#include "scherk/weierstrass.hpp"

namespace fam = scherk::family;
namespace weier = scherk::weier;
namespace quad = scherk::quad;
namespace bounds = scherk::bounds;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;
int g_failures = 0;

struct Criterion {
    std::string name;
    double time_limit;
    std::chrono::steady_clock::time_point start;
    bool ok = true;
    std::string first_failure;

    Criterion(std::string n, double limit)
        : name(std::move(n)), time_limit(limit), start(std::chrono::steady_clock::now()) {}

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
    }

    void finish() {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > time_limit) {
            ok = false;
            if (first_failure.empty())
                first_failure = "runtime " + std::to_string(secs) + "s over limit";
        }
        std::printf("%-4s %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), secs,
                    ok ? "" : " -- ", ok ? "" : first_failure.c_str());
        std::fflush(stdout);
        if (!ok) ++g_failures;
    }
};

std::vector<Complex> disk_points(int n, double r_max, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Complex> pts;
    while (static_cast<int>(pts.size()) < n) {
        const Complex z = std::polar(r_max * std::sqrt(unit(gen)), 2 * kPi * unit(gen));
        bool clear = true;
        for (const Complex b : {Complex{1, 0}, Complex{-1, 0}, Complex{0, 1}, Complex{0, -1}})
            if (std::abs(z - b) < 1e-3) clear = false;
        if (clear) pts.push_back(z);
    }
    return pts;
}

void criterion_1_family_endpoints() {
    Criterion c("1 family endpoints: kappa(pi/2)^2 = pi^2/2, kappa(t_c+) ~ 0, t_c", 1.0);
    const double tc = fam::t_critical();
    const double k2 = fam::kappa(kPi / 2) * fam::kappa(kPi / 2);
    c.require(std::fabs(k2 - kPi * kPi / 2) < 1e-12, "kappa(pi/2)^2 off");
    c.require(fam::kappa(tc + 1e-9) < 1e-4, "kappa near t_critical too large");
    c.require(std::fabs(tc - 1.33248) < 1e-5, "t_critical value off");
    c.finish();
}

void criterion_2_monotonicity() {
    Criterion c("2 monotonicity scans: kappa, phi, psi, Phi on 1e4 grids", 5.0);
    const double tc = fam::t_critical();
    const int n = 10000;

    double prev = fam::kappa(tc);
    double min_diff = 1e300;
    for (int i = 1; i < n; ++i) {
        const double t = tc + (kPi / 2 - tc) * i / (n - 1.0);
        const double k = fam::kappa(t);
        min_diff = std::min(min_diff, k - prev);
        prev = k;
    }
    c.require(min_diff >= -1e-12, "kappa not nondecreasing");

    double max_phi = -1e300, min_psi_vt = 1e300, min_vt = 1e300;
    for (int i = 0; i < n; ++i) {
        const double t = tc + (kPi / 2 - tc) * (i + 0.5) / n;
        const auto prof = fam::inequality_profile(t);
        max_phi = std::max(max_phi, prof.phi);
        min_psi_vt = std::min(min_psi_vt, prof.psi - prof.vartheta);
        min_vt = std::min(min_vt, prof.vartheta);
    }
    c.require(max_phi <= kPi / std::sqrt(2.0) + 1e-12, "phi exceeds pi/sqrt2");
    c.require(min_psi_vt >= -1e-12, "psi < vartheta");
    c.require(min_vt >= std::sqrt(2.0) / 2 - 1e-12, "vartheta < sqrt2/2");

    const double u_lo = std::sqrt(0.5 * (std::sqrt(5.0) - 1.0));
    double prev_phi = fam::phi_of_u(u_lo + (1.0 - u_lo) * 0.5 / n);
    double min_slope = 1e300;
    for (int i = 1; i < n; ++i) {
        const double u = u_lo + (1.0 - u_lo) * (i + 0.5) / n;
        const double v = fam::phi_of_u(u);
        min_slope = std::min(min_slope, v - prev_phi);
        prev_phi = v;
    }
    c.require(min_slope > 0.0, "Phi slope not positive");
    c.finish();
}

void criterion_3_poisson_oracle() {
    Criterion c("3 closed-form map vs Poisson oracle: 5 t x 500 points < 1e-8", 30.0);
    const double tc = fam::t_critical();
    const double ts[5] = {tc + 0.03, 1.4, 1.45, 1.52, kPi / 2};
    double worst = 0.0, worst_f0 = 0.0, worst_fc = 0.0;
    for (int k = 0; k < 5; ++k) {
        const double t = ts[k];
        const auto pts = disk_points(500, 0.85, 1000u + static_cast<unsigned>(k));
        for (const Complex& z : pts)
            worst = std::max(worst,
                             std::abs(fam::map_point(t, z) - fam::poisson_oracle(t, z, 1e-10)));
        const auto geo = fam::trapezoid_geometry(t);
        Complex avg{0, 0};
        for (const auto& v : geo.vertices) avg += v;
        avg *= 0.25;
        worst_f0 = std::max(worst_f0, std::abs(avg - Complex{0.0, std::sqrt(std::cos(t))}));
        worst_fc = std::max(worst_fc, std::abs(fam::map_point(t, fam::z_center(t))));
    }
    c.require(worst < 1e-8, "map vs oracle sup error " + std::to_string(worst));
    c.require(worst_f0 < 1e-13, "f(0) identity");
    c.require(worst_fc < 1e-10, "f(z_center) != 0");
    c.finish();
}

void criterion_4_weierstrass() {
    Criterion c("4 Weierstrass consistency: curvature routes, normals, MSE, f_uv", 60.0);
    std::mt19937 gen(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Complex p = std::polar(0.2 + 3.0 * unit(gen), 2 * kPi * unit(gen));
        const Complex q = std::polar(0.02 + 0.95 * unit(gen), 2 * kPi * unit(gen));
        const Complex qp = std::polar(0.1 + 2.0 * unit(gen), 2 * kPi * unit(gen));
        const double k1 = weier::curvature(p, q, qp);
        const double k2 = -std::norm(2.0 * q * qp) /
                          (std::abs(p * p * q * q) * std::pow(1.0 + std::norm(q), 4));
        worst = std::max(worst, std::fabs(k1 - k2) / std::max(1.0, std::fabs(k1)));
    }
    c.require(worst <= 1e-12, "curvature routes disagree");

    worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Complex q = std::polar(0.97 * std::sqrt(unit(gen)), 2 * kPi * unit(gen));
        const auto n = weier::unit_normal(q);
        const auto [fu, fv] = weier::slopes(q);
        const double len = std::sqrt(1.0 + fu * fu + fv * fv);
        worst = std::max({worst, std::fabs(n[0] + fu / len), std::fabs(n[1] + fv / len),
                          std::fabs(n[2] - 1.0 / len)});
    }
    c.require(worst <= 1e-12, "normal vs slopes identity");

    // MSE convergence order between h = 1e-3 and h = 1e-4 at 50 points
    double min_order = 1e300;
    const double tc = fam::t_critical();
    for (int k = 0; k < 5; ++k) {
        const double t = tc + 0.05 + (kPi / 2 - tc - 0.05) * k / 4.0;
        for (const Complex& z : disk_points(10, 0.7, 3000u + static_cast<unsigned>(k))) {
            const double r1 = std::fabs(weier::second_derivatives(t, z, 1e-3).mse_residual);
            const double r2 = std::fabs(weier::second_derivatives(t, z, 1e-4).mse_residual);
            if (r1 < 1e-13) continue;
            min_order = std::min(min_order, std::log10(r1 / std::max(r2, 1e-18)));
        }
    }
    c.require(min_order >= 1.9, "MSE order " + std::to_string(min_order));

    // mixed_second vs the FD solve at 50 points
    worst = 0.0;
    for (int k = 0; k < 2; ++k) {
        const double t = (k == 0) ? 1.42 : 1.53;
        for (const Complex& z : disk_points(25, 0.7, 4000u + static_cast<unsigned>(k))) {
            const auto e = fam::ew_data(t, z);
            worst = std::max(worst, std::fabs(weier::second_derivatives(t, z, 1e-4).f_uv -
                                              weier::mixed_second(e.p, e.q, e.qprime)));
        }
    }
    c.require(worst <= 1e-6, "mixed_second vs FD " + std::to_string(worst));

    worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double t = tc + (kPi / 2 - tc) * (i + 1.0) / 21.0;
        const auto e = fam::ew_data(t, {fam::z_center(t), 0.0});
        worst = std::max(worst, std::fabs(weier::mixed_second(e.p, e.q, e.qprime)));
    }
    c.require(worst <= 1e-10, "mixed_second at z_center");
    c.finish();
}

void criterion_5_bounds() {
    Criterion c("5 bound constants: r_diamond, G, Hopf, Hall, ordering", 1.0);
    const auto rep = bounds::corollary_constants();
    c.require(std::fabs(rep.r_diamond - 0.067344733) < 1e-8, "r_diamond");
    c.require(std::fabs(rep.g_at_r_diamond - 5.6918) < 5e-4, "G(r_diamond)");
    c.require(std::fabs(rep.hopf_value - 5.79608) < 5e-5, "hopf value");
    c.require(std::fabs(rep.hall - 5.84865) < 5e-6, "hall value");
    c.require(rep.finn_osserman < rep.g_at_r_diamond &&
                  rep.g_at_r_diamond < rep.hopf_value && rep.hopf_value < rep.hall,
              "ordering chain");
    c.finish();
}

void criterion_6_quad_solver() {
    Criterion c("6 quad solver: seed oracle, solve matches, curvature, square", 60.0);
    const double tc = fam::t_critical();
    double worst_seed = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double t = tc + 0.02 + (kPi / 2 - tc - 0.02) * i / 9.0;
        worst_seed = std::max(worst_seed, quad::residual_inf(quad::trapezoid_seed(t)));
    }
    c.require(worst_seed <= 1e-10, "seed residual " + std::to_string(worst_seed));

    double worst_cfg = 0.0, worst_curv = 0.0;
    for (double t : {1.38, 1.45, 1.52}) {
        const auto seed = quad::trapezoid_seed(t);
        const auto sol = quad::solve_quad(Complex{0.0, 1.0} * fam::a_of_t(t));
        worst_cfg = std::max(worst_cfg, quad::config_distance(sol.config, seed));
        const double k = fam::kappa(t);
        worst_curv = std::max(worst_curv,
                              std::fabs(quad::centre_curvature(sol.config).gauss + k * k));
    }
    c.require(worst_cfg <= 1e-8, "solve vs seed " + std::to_string(worst_cfg));
    c.require(worst_curv <= 1e-8, "centre curvature vs -kappa^2");

    const auto sq = quad::solve_quad({0, 0});
    double worst_gap = 0.0;
    for (int k = 0; k < 3; ++k)
        worst_gap = std::max(worst_gap, std::fabs(sq.config.theta[k + 1] -
                                                  sq.config.theta[k] - kPi / 2));
    c.require(worst_gap <= 1e-8, "square vertex gaps");
    c.require(std::fabs(quad::centre_curvature(sq.config).gauss + kPi * kPi / 2) <= 1e-8,
              "square curvature");
    c.finish();
}

void criterion_7_scan() {
    Criterion c("7 Heinz/Hopf scan 32x32, r_max 0.9: >=95% converged, bounded", 600.0);
    const auto scan = quad::heinz_hopf_scan(32, 0.9);
    const int total = static_cast<int>(scan.cells.size());
    const double converged_frac = 1.0 - static_cast<double>(scan.failures) / total;
    c.require(converged_frac >= 0.95,
              "converged fraction " + std::to_string(converged_frac));
    c.require(scan.c0_max <= 5.7, "c0 candidate exceeds 5.7");
    c.require(scan.c1_max <= 5.8, "c1 candidate exceeds 5.8");
    c.require(std::fabs(scan.cells[0].c0 - kPi * kPi / 2) <= 1e-6,
              "w=0 cell curvature");
    c.finish();
}

void criterion_8_psi() {
    Criterion c("8 Psi endpoints and strict decrease on 1e3 grid", 30.0);
    c.require(std::fabs(fam::psi_of_theta(0.0) - kPi * kPi / 2) <= 1e-10, "Psi(0)");
    c.require(fam::psi_of_theta(kPi / 2) <= 1e-10, "Psi(pi/2)");
    double prev = fam::psi_of_theta(0.0);
    bool strict = true;
    for (int i = 1; i < 1000; ++i) {
        const double th = kPi / 2 * i / 999.0;
        const double v = fam::psi_of_theta(th);
        if (!(v < prev)) strict = false;
        prev = v;
    }
    c.require(strict, "Psi not strictly decreasing");
    c.finish();
}

void criterion_9_symmetric_points() {
    Criterion c("9 symmetric points: catenoid/saddle pass, helicoid fails 720 dirs", 10.0);
    const auto cat = weier::catenoid();
    const auto sad = weier::scherk_saddle();
    const auto hel = weier::helicoid();
    bool cat_ok = true;
    for (double u : {1.5, 2.0, 3.0, -2.5})
        cat_ok = cat_ok &&
                 weier::symmetric_point_check(cat, {u, 0.0}, {0, 1}, 1e-8).is_symmetric;
    c.require(cat_ok, "catenoid axis points");
    bool sad_ok = true;
    for (double v : {0.0, 0.5, -1.0})
        sad_ok = sad_ok &&
                 weier::symmetric_point_check(sad, {0.0, v}, {1, 0}, 1e-8).is_symmetric;
    c.require(sad_ok, "saddle axis points");
    c.require(!weier::has_symmetric_direction(hel, {1.0, 1.0}, 720, 1e-8),
              "helicoid should fail all directions");
    c.finish();
}

}  // namespace

int main() {
    criterion_1_family_endpoints();
    criterion_2_monotonicity();
    criterion_3_poisson_oracle();
    criterion_4_weierstrass();
    criterion_5_bounds();
    criterion_6_quad_solver();
    criterion_7_scan();
    criterion_8_psi();
    criterion_9_symmetric_points();
    std::printf("%s: %d criterion(s) failed\n", g_failures == 0 ? "OK" : "FAILED",
                g_failures);
    return g_failures;
}
