#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "scherk/bounds.hpp"

using namespace scherk;
namespace b = scherk::bounds;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHall = 16.0 * kPi * kPi / 27.0;
}

TEST_CASE("hall_chain fixed values") {
    CHECK(b::hall_chain(0.0) == doctest::Approx(kHall));
    CHECK(std::fabs(b::hall_chain(0.0) - 5.84865) < 5e-6);
    CHECK(b::hall_chain(0.999999) < 1e-10);
    // direct substitution at r = 0.5
    const double expect = kHall * 0.75 * 0.75 * 1.0625 / std::pow(1.25, 4);
    CHECK(b::hall_chain(0.5) == doctest::Approx(expect));
    CHECK_THROWS_AS(b::hall_chain(-0.1), DomainError);
    CHECK_THROWS_AS(b::hall_chain(1.0), DomainError);
}

TEST_CASE("bound functions at the ends") {
    const auto at0 = b::bound_functions(0.0);
    CHECK(at0.G == doctest::Approx(kHall));
    CHECK(at0.H == doctest::Approx(kPi * kPi / 2));
    CHECK(at0.min_GH == doctest::Approx(kPi * kPi / 2));
    CHECK(b::bound_functions(0.999999).G < 1e-10);
    CHECK(b::hall_chain(0.0) == b::bound_functions(0.0).G);
}

TEST_CASE("corollary constants reproduce the published values") {
    const auto rep = b::corollary_constants();
    CHECK(std::fabs(rep.r_diamond - 0.067344733) < 1e-8);
    CHECK(std::fabs(rep.g_at_r_diamond - 5.6918) < 5e-4);
    CHECK(std::fabs(rep.hopf_value - 5.79608) < 5e-5);
    CHECK(std::fabs(rep.hall - 5.84865) < 5e-6);
    CHECK(rep.finn_osserman == doctest::Approx(kPi * kPi / 2));

    // chain ordering
    CHECK(rep.finn_osserman < rep.g_at_r_diamond);
    CHECK(rep.g_at_r_diamond < rep.hopf_value);
    CHECK(rep.hopf_value < rep.hall);

    // crossing property
    const auto gh = b::bound_functions(rep.r_diamond);
    CHECK(std::fabs(gh.G - gh.H) < 1e-10);
}

TEST_CASE("G decreasing, H increasing near zero") {
    double prev_g = b::bound_functions(0.0).G;
    for (int i = 1; i < 10000; ++i) {
        const double r = 0.99 * i / 9999.0;
        const double g = b::bound_functions(r).G;
        CHECK(g < prev_g);
        prev_g = g;
    }
    double prev_h = b::bound_functions(0.0).H;
    for (int i = 1; i < 2000; ++i) {
        const double r = 0.2 * i / 1999.0;
        const double h = b::bound_functions(r).H;
        CHECK(h > prev_h);
        prev_h = h;
    }
}

TEST_CASE("max-min of the G/H pair sits at the crossing") {
    const auto rep = b::corollary_constants();
    double best = -1.0, best_r = 0.0;
    for (int i = 0; i < 20000; ++i) {
        const double r = 0.5 * (i + 0.5) / 20000.0;
        const double m = b::bound_functions(r).min_GH;
        if (m > best) {
            best = m;
            best_r = r;
        }
    }
    // min(G, H) has a kink at the crossing, so grid resolution limits both
    CHECK(std::fabs(best_r - rep.r_diamond) < 1e-3);
    CHECK(std::fabs(best - rep.g_at_r_diamond) < 5e-4);
}

TEST_CASE("schwarz_harmonic") {
    CHECK(b::schwarz_harmonic(0.0) == 0.0);
    CHECK(b::schwarz_harmonic(0.9999999) < 1.0);
    CHECK(b::schwarz_harmonic(0.9999999) > 0.9999);
    CHECK(b::schwarz_harmonic(0.5) == doctest::Approx(4.0 / kPi * std::atan(0.5)));
    CHECK_THROWS_AS(b::schwarz_harmonic(1.0), DomainError);
}

TEST_CASE("improved |f_z(0)| bound") {
    CHECK(b::fz0_improved_bound({0, 0}, {0, 0}) ==
          doctest::Approx(2.0 * std::sqrt(2.0) / kPi));
    CHECK(b::fz0_improved_bound({0, 0}, {0.9999999, 0.0}) < 1e-6);
    // the H-chain intermediate: w = 0.3 with the Schwarz-lemma value
    const double w = 0.3;
    const double fr = b::schwarz_harmonic(w);
    const double got = b::fz0_improved_bound({w, 0.0}, {fr, 0.0});
    const double expect = 2.0 * std::sqrt(2.0) / kPi * (1.0 - fr) / (1.0 - w * w);
    CHECK(got == doctest::Approx(expect));
    // squaring the chain reproduces H up to the curvature prefactor
    const double curv_bound = 4.0 * std::pow(1 - w * w, 2) /
                              (std::pow(1 + w * w, 4) * got * got);
    const double H = b::bound_functions(w).H;
    CHECK(curv_bound == doctest::Approx(H).epsilon(1e-12));
    CHECK_THROWS_AS(b::fz0_improved_bound({1.0, 0.0}, {0, 0}), DomainError);
    CHECK_THROWS_AS(b::fz0_improved_bound({0, 0}, {1.0, 0.0}), DomainError);
}
