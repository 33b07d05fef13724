#include "scherk/bounds.hpp"

#include <cmath>
#include <limits>

#include "scherk/numerics.hpp"

namespace scherk::bounds {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHall = 16.0 * kPi * kPi / 27.0;
}  // namespace

double hall_chain(double r) {
    if (r < 0.0 || r >= 1.0) throw DomainError("hall_chain: r must lie in [0, 1)");
    const double r2 = r * r;
    const double den = (1.0 + r2) * (1.0 + r2);
    return kHall * (1.0 - r2) * (1.0 - r2) * (1.0 + r2 * r2) / (den * den);
}

double schwarz_harmonic(double r) {
    if (r < 0.0 || r >= 1.0) throw DomainError("schwarz_harmonic: r must lie in [0, 1)");
    return 4.0 / kPi * std::atan(r);
}

GH bound_functions(double r) {
    if (r < 0.0 || r >= 1.0) throw DomainError("bound_functions: r must lie in [0, 1)");
    GH out;
    out.G = hall_chain(r);
    const double r2 = r * r;
    const double shrink = 1.0 - schwarz_harmonic(r);
    if (shrink <= 0.0) {
        out.H = std::numeric_limits<double>::infinity();
    } else {
        const double ratio = (1.0 - r2) / (1.0 + r2);
        out.H = kPi * kPi / 2.0 * std::pow(ratio, 4) / (shrink * shrink);
    }
    out.min_GH = std::min(out.G, out.H);
    return out;
}

BoundsReport corollary_constants() {
    BoundsReport rep;
    rep.finn_osserman = kPi * kPi / 2.0;
    rep.hall = kHall;
    rep.r_diamond = numerics::find_root_bisect(
        [](double r) {
            const GH gh = bound_functions(r);
            return gh.G - gh.H;
        },
        numerics::RootBracket{0.01, 0.5, 1e-12});
    rep.g_at_r_diamond = bound_functions(rep.r_diamond).G;
    const double r2 = rep.r_diamond * rep.r_diamond;
    rep.hopf_value = kHall * (1.0 + r2 * r2) / ((1.0 + r2) * (1.0 + r2));
    return rep;
}

double fz0_improved_bound(std::complex<double> w,
                          std::complex<double> f_at_reflected) {
    if (std::abs(w) >= 1.0) throw DomainError("fz0_improved_bound: |w| must be < 1");
    const double fr = std::abs(f_at_reflected);
    if (fr >= 1.0)
        throw DomainError("fz0_improved_bound: |f at reflected point| must be < 1");
    return 2.0 * std::sqrt(2.0) / kPi * (1.0 - fr) / (1.0 - std::norm(w));
}

}  // namespace scherk::bounds
