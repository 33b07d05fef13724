// scherk: curvature toolkit for Scherk-type minimal graphs over inscribed
// quadrilaterals.
//
// Subcommands: family, mesh, psi, bounds, solve-quad, scan, verify.
// Exit codes: 0 success, 1 verification failure, 2 usage/domain error,
// 3 I/O error.

#include <chrono>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "scherk/bounds.hpp"
#include "scherk/family.hpp"
#include "scherk/mesh_io.hpp"
#include "scherk/quad_solver.hpp"
#include "scherk/report.hpp"
#include "scherk/verify.hpp"
#include "scherk/weierstrass.hpp"

namespace {

using Complex = std::complex<double>;
using scherk::io::Report;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr double kPi = 3.14159265358979323846;

Complex parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw scherk::DomainError("expected complex flag as re,im: " + text);
    try {
        const double re = std::stod(text.substr(0, comma));
        const double im = std::stod(text.substr(comma + 1));
        return {re, im};
    } catch (const std::exception&) {
        throw scherk::DomainError("cannot parse complex value: " + text);
    }
}

int emit(const Report& report, const std::string& json_path) {
    std::cout << report.serialize() << "\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw scherk::IoError("cannot open for writing: " + json_path);
        out << report.serialize() << "\n";
        if (!out) throw scherk::IoError("write failed: " + json_path);
    }
    return report.status == "ok" ? kExitOk : kExitUsage;
}

int scan_threads() {
    if (const char* env = std::getenv("SCHERK_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 0;  // library default: hardware concurrency
}

int cmd_family(double t, const std::string& json_path) {
    Report rep;
    rep.command = "family";
    rep.inputs["t"] = t;
    const auto geo = scherk::family::trapezoid_geometry(t);
    if (!(t > scherk::family::t_critical()))
        throw scherk::DomainError("family: t must exceed t_critical ~ 1.33248 "
                                  "for the curvature fields");
    const double z0 = scherk::family::z_center(t);
    const double kap = scherk::family::kappa(t);
    const double a = scherk::family::a_of_t(t);
    const Complex f0{0.0, std::sqrt(std::cos(t))};
    rep.outputs["s"] = geo.s;
    rep.outputs["tau"] = geo.tau;
    rep.outputs["t_critical"] = geo.t_critical;
    for (int k = 0; k < 4; ++k) {
        rep.outputs["vertices_re"].push_back(geo.vertices[k].real());
        rep.outputs["vertices_im"].push_back(geo.vertices[k].imag());
    }
    rep.outputs["f0_re"] = f0.real();
    rep.outputs["f0_im"] = f0.imag();
    rep.outputs["z_center"] = z0;
    rep.outputs["kappa"] = kap;
    rep.outputs["kappa_sq"] = kap * kap;
    rep.outputs["a_of_t"] = a;
    // theta with Psi(theta) = kappa^2: the tangent-plane angle of this surface
    rep.outputs["theta_normal"] = 2.0 * std::atan(a);
    rep.outputs["psi_at_theta"] = kap * kap;
    return emit(rep, json_path);
}

int cmd_mesh(double t, int n_r, int n_theta, double r_max, double t_cap,
             const std::string& format, const std::string& out_path,
             const std::string& json_path) {
    if (format != "obj" && format != "csv")
        throw scherk::DomainError("mesh: format must be obj or csv");
    const auto mesh = scherk::weier::sample_mesh(t, n_r, n_theta, r_max, t_cap);
    if (format == "obj")
        scherk::io::write_obj(mesh, out_path);
    else
        scherk::io::write_csv(mesh, out_path);

    Report rep;
    rep.command = "mesh";
    rep.inputs = {{"t", t},       {"n_r", n_r},     {"n_theta", n_theta},
                  {"r_max", r_max}, {"t_cap", t_cap}, {"format", format},
                  {"out", out_path}};
    rep.outputs["vertices"] = mesh.vertices.size();
    rep.outputs["faces"] = mesh.faces.size();
    rep.diagnostics["clamp_count"] = mesh.clamp_count;
    return emit(rep, json_path);
}

int cmd_psi(std::optional<double> theta, std::optional<int> table_n,
            const std::string& json_path) {
    Report rep;
    rep.command = "psi";
    if (theta && table_n)
        throw scherk::DomainError("psi: give either --theta or --table, not both");
    if (theta) {
        rep.inputs["theta"] = *theta;
        rep.outputs["psi"] = scherk::family::psi_of_theta(*theta);
    } else if (table_n) {
        if (*table_n < 2) throw scherk::DomainError("psi: table size must be >= 2");
        rep.inputs["table"] = *table_n;
        for (int i = 0; i < *table_n; ++i) {
            const double th = kPi / 2 * i / (*table_n - 1);
            rep.outputs["theta"].push_back(th);
            rep.outputs["psi"].push_back(scherk::family::psi_of_theta(th));
        }
    } else {
        throw scherk::DomainError("psi: requires --theta or --table");
    }
    return emit(rep, json_path);
}

int cmd_bounds(const std::string& json_path) {
    const auto rep_vals = scherk::bounds::corollary_constants();
    Report rep;
    rep.command = "bounds";
    rep.outputs["finn_osserman"] = rep_vals.finn_osserman;
    rep.outputs["hall"] = rep_vals.hall;
    rep.outputs["r_diamond"] = rep_vals.r_diamond;
    rep.outputs["g_at_r_diamond"] = rep_vals.g_at_r_diamond;
    rep.outputs["hopf_value"] = rep_vals.hopf_value;
    return emit(rep, json_path);
}

int cmd_solve_quad(const std::string& w_text, std::optional<double> seed_t,
                   const std::string& json_path) {
    const Complex w = parse_complex(w_text);
    std::optional<scherk::quad::QuadConfig> seed;
    if (seed_t) seed = scherk::quad::trapezoid_seed(*seed_t);
    const auto sol = scherk::quad::solve_quad(w, seed);
    const auto curv = scherk::quad::centre_curvature(sol.config);

    Report rep;
    rep.command = "solve-quad";
    rep.inputs["w_re"] = w.real();
    rep.inputs["w_im"] = w.imag();
    if (seed_t) rep.inputs["seed_t"] = *seed_t;
    for (int k = 0; k < 4; ++k) {
        rep.outputs["alpha"].push_back(sol.config.alpha[k]);
        rep.outputs["theta"].push_back(sol.config.theta[k]);
    }
    const Complex fz0 = sol.config.fz0();
    rep.outputs["fz0_re"] = fz0.real();
    rep.outputs["fz0_im"] = fz0.imag();
    rep.outputs["curvature"] = curv.gauss;
    rep.outputs["hopf_form"] = curv.hopf;
    rep.diagnostics["residual_inf"] = sol.residual_inf;
    rep.diagnostics["lm_iterations"] = sol.lm_iterations;
    rep.diagnostics["continuation_steps"] = sol.continuation_steps;
    return emit(rep, json_path);
}

int cmd_scan(int grid_n, double r_max, const std::string& out_path,
             const std::string& json_path) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto scan = scherk::quad::heinz_hopf_scan(grid_n, r_max, scan_threads());
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw scherk::IoError("cannot open for writing: " + out_path);
    out << "re_w,im_w,c0,c1,status\n";
    char buf[160];
    for (const auto& cell : scan.cells) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%s\n",
                      cell.w.real(), cell.w.imag(), cell.c0, cell.c1,
                      cell.converged ? "ok" : "fail");
        out << buf;
    }
    if (!out) throw scherk::IoError("write failed: " + out_path);

    Report rep;
    rep.command = "scan";
    rep.inputs = {{"grid", grid_n}, {"rmax", r_max}, {"out", out_path}};
    rep.outputs["c0_max"] = scan.c0_max;
    rep.outputs["c1_max"] = scan.c1_max;
    rep.outputs["argmax_c0_re"] = scan.argmax_c0.real();
    rep.outputs["argmax_c0_im"] = scan.argmax_c0.imag();
    rep.outputs["argmax_c1_re"] = scan.argmax_c1.real();
    rep.outputs["argmax_c1_im"] = scan.argmax_c1.imag();
    rep.outputs["failures"] = scan.failures;
    rep.outputs["cells"] = scan.cells.size();
    rep.diagnostics["seconds"] = secs;
    return emit(rep, json_path);
}

int cmd_verify(const std::string& suite, double tol_scale) {
    scherk::verify::Options opts;
    opts.tol_scale = tol_scale;
    const auto results = scherk::verify::run_suite(suite, opts);
    double worst = 1e300;
    std::string worst_name;
    int failures = 0;
    for (const auto& r : results) {
        std::printf("%-4s %-45s margin=%.3e\n", r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.margin);
        if (!r.pass) ++failures;
        if (r.margin < worst) {
            worst = r.margin;
            worst_name = r.name;
        }
    }
    std::printf("%d/%zu checks passed; worst margin %.3e (%s)\n",
                static_cast<int>(results.size()) - failures, results.size(), worst,
                worst_name.c_str());
    return failures == 0 ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Curvature toolkit for Scherk-type minimal graphs"};
    app.require_subcommand(1);

    // family
    auto* family = app.add_subcommand("family", "Report the trapezoid family S^t");
    double family_t = 1.5;
    std::string family_json;
    family->add_option("--t", family_t, "vertex angle t in (t_critical, pi/2]")->required();
    family->add_option("--json", family_json, "also write the report to this file");

    // mesh
    auto* mesh = app.add_subcommand("mesh", "Sample S^t and export OBJ/CSV");
    double mesh_t = 1.4707963267948966, mesh_rmax = 0.999, mesh_tcap = 5.0;
    int mesh_nr = 64, mesh_ntheta = 64;
    std::string mesh_format = "obj", mesh_out, mesh_json;
    mesh->add_option("--t", mesh_t, "vertex angle t")->required();
    mesh->add_option("--nr", mesh_nr, "radial samples");
    mesh->add_option("--ntheta", mesh_ntheta, "angular samples");
    mesh->add_option("--rmax", mesh_rmax, "outer radius (<= 0.999)");
    mesh->add_option("--tcap", mesh_tcap, "height clamp");
    mesh->add_option("--format", mesh_format, "obj or csv");
    mesh->add_option("--out", mesh_out, "output path")->required();
    mesh->add_option("--json", mesh_json, "also write the report to this file");

    // psi
    auto* psi = app.add_subcommand("psi", "Evaluate the angle-to-curvature bound Psi");
    double psi_theta = 0.0;
    int psi_table = 0;
    std::string psi_json;
    auto* opt_theta = psi->add_option("--theta", psi_theta, "angle in [0, pi/2]");
    auto* opt_table = psi->add_option("--table", psi_table, "emit an N-row table");
    psi->add_option("--json", psi_json, "also write the report to this file");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Reproduce the curvature-bound constants");
    std::string bounds_json;
    bounds->add_option("--json", bounds_json, "also write the report to this file");

    // solve-quad
    auto* sq = app.add_subcommand("solve-quad", "Solve the inscribed-quadrilateral problem");
    std::string sq_w, sq_json;
    double sq_seed_t = 0.0;
    sq->add_option("--w", sq_w, "target w as re,im with |w| <= 0.95")->required();
    auto* opt_seed = sq->add_option("--seed-t", sq_seed_t, "seed from trapezoid t");
    sq->add_option("--json", sq_json, "also write the report to this file");

    // scan
    auto* scan = app.add_subcommand("scan", "Heinz/Hopf candidate scan on a polar grid");
    int scan_grid = 16;
    double scan_rmax = 0.8;
    std::string scan_out, scan_json;
    scan->add_option("--grid", scan_grid, "grid size N (N radii x N angles)");
    scan->add_option("--rmax", scan_rmax, "outer |w| (<= 0.9)");
    scan->add_option("--out", scan_out, "CSV output path")->required();
    scan->add_option("--json", scan_json, "also write the report to this file");

    // verify
    auto* verify = app.add_subcommand("verify", "Run the invariant suites");
    std::string verify_suite = "all";
    double verify_tol_scale = 1.0;
    verify->add_option("--suite", verify_suite, "all|family|weierstrass|solver|bounds");
    verify->add_option("--tol-scale", verify_tol_scale,
                       "multiply all tolerances (smaller = stricter)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (family->parsed()) return cmd_family(family_t, family_json);
        if (mesh->parsed())
            return cmd_mesh(mesh_t, mesh_nr, mesh_ntheta, mesh_rmax, mesh_tcap,
                            mesh_format, mesh_out, mesh_json);
        if (psi->parsed())
            return cmd_psi(opt_theta->count() ? std::optional<double>(psi_theta)
                                              : std::nullopt,
                           opt_table->count() ? std::optional<int>(psi_table)
                                              : std::nullopt,
                           psi_json);
        if (bounds->parsed()) return cmd_bounds(bounds_json);
        if (sq->parsed())
            return cmd_solve_quad(sq_w,
                                  opt_seed->count() ? std::optional<double>(sq_seed_t)
                                                    : std::nullopt,
                                  sq_json);
        if (scan->parsed()) return cmd_scan(scan_grid, scan_rmax, scan_out, scan_json);
        if (verify->parsed()) return cmd_verify(verify_suite, verify_tol_scale);
    } catch (const scherk::IoError& e) {
        Report rep;
        rep.command = app.get_subcommands().empty()
                          ? "?"
                          : app.get_subcommands()[0]->get_name();
        rep.status = "error";
        rep.message = e.what();
        std::cout << rep.serialize() << "\n";
        return kExitIo;
    } catch (const scherk::Error& e) {
        Report rep;
        rep.command = app.get_subcommands().empty()
                          ? "?"
                          : app.get_subcommands()[0]->get_name();
        rep.status = "error";
        rep.message = e.what();
        std::cout << rep.serialize() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
