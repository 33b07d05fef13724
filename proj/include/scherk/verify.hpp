#pragma once

// Named invariant suites behind the `verify` CLI command.  Each check returns
// a pass flag plus its worst margin (positive means the check held with room
// to spare).

#include <functional>
#include <string>
#include <vector>

namespace scherk::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    double margin = 0.0;
    std::string detail;
};

struct Options {
    // Multiplies every tolerance; values < 1 tighten the checks.
    double tol_scale = 1.0;
    // Test hook: replaces family::kappa inside the family suite.
    std::function<double(double)> kappa_override;
};

std::vector<CheckResult> family_suite(const Options& opts = {});
std::vector<CheckResult> weierstrass_suite(const Options& opts = {});
std::vector<CheckResult> solver_suite(const Options& opts = {});
std::vector<CheckResult> bounds_suite(const Options& opts = {});

// suite in {all, family, weierstrass, solver, bounds}
std::vector<CheckResult> run_suite(const std::string& suite, const Options& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace scherk::verify
