#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string cli_path() {
    const char* p = std::getenv("SCHERK_CLI");
    REQUIRE_MESSAGE(p != nullptr, "SCHERK_CLI must point at the scherk binary");
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string out_file = "cli_stdout.tmp";
    const std::string cmd = cli_path() + " " + args + " > " + out_file + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(out_file, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::remove(out_file.c_str());
    return {WEXITSTATUS(rc), ss.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("family reports kappa^2 = pi^2/2 at t = pi/2") {
    const auto res = run("family --t 1.5707963267948966");
    CHECK(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["status"] == "ok");
    CHECK(std::fabs(j["outputs"]["kappa_sq"].get<double>() - 4.9348022005446793) < 1e-7);
}

TEST_CASE("family rejects t below the family threshold with exit 2") {
    const auto res = run("family --t 1.0");
    CHECK(res.exit_code == 2);
    const json j = json::parse(res.out);
    CHECK(j["status"] == "error");
}

TEST_CASE("family --json writes a parseable report") {
    const std::string path = "family_report.tmp.json";
    const auto res = run("family --t 1.45 --json " + path);
    CHECK(res.exit_code == 0);
    const json j = json::parse(slurp(path));
    CHECK(j["command"] == "family");
    CHECK(j["inputs"]["t"].get<double>() == 1.45);
    std::remove(path.c_str());
}

TEST_CASE("mesh export is deterministic and well formed") {
    const std::string p1 = "mesh1.tmp.obj", p2 = "mesh2.tmp.obj";
    const std::string flags = "mesh --t 1.4707963267948966 --nr 16 --ntheta 16 "
                              "--rmax 0.99 --tcap 5 --format obj --out ";
    CHECK(run(flags + p1).exit_code == 0);
    CHECK(run(flags + p2).exit_code == 0);
    const std::string a = slurp(p1), b = slurp(p2);
    CHECK(!a.empty());
    CHECK(a == b);
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("mesh csv has the grid row count") {
    const std::string path = "mesh.tmp.csv";
    const auto res = run("mesh --t 1.45 --nr 5 --ntheta 7 --rmax 0.9 --tcap 5 "
                         "--format csv --out " + path);
    CHECK(res.exit_code == 0);
    std::istringstream ss(slurp(path));
    int rows = 0;
    std::string line;
    while (std::getline(ss, line)) ++rows;
    CHECK(rows == 5 * 7 + 1);
    std::remove(path.c_str());
}

TEST_CASE("mesh with unwritable path exits 3") {
    const auto res = run("mesh --t 1.45 --out /nonexistent_dir_xyz/m.obj");
    CHECK(res.exit_code == 3);
}

TEST_CASE("psi evaluates endpoints and tables") {
    const auto res = run("psi --theta 0");
    CHECK(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(std::fabs(j["outputs"]["psi"].get<double>() - 4.9348022005446793) < 1e-9);

    const auto tbl = run("psi --table 5");
    CHECK(tbl.exit_code == 0);
    const json jt = json::parse(tbl.out);
    CHECK(jt["outputs"]["psi"].size() == 5);
    CHECK(jt["outputs"]["psi"][4].get<double>() < 1e-10);

    CHECK(run("psi").exit_code == 2);
}

TEST_CASE("bounds reproduces the constants") {
    const auto res = run("bounds");
    CHECK(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(std::fabs(j["outputs"]["r_diamond"].get<double>() - 0.067344733) < 1e-8);
    CHECK(std::fabs(j["outputs"]["hopf_value"].get<double>() - 5.79608) < 5e-5);
}

TEST_CASE("solve-quad with a complex flag") {
    const auto res = run("solve-quad --w 0.2,0.1");
    CHECK(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["status"] == "ok");
    CHECK(j["diagnostics"]["residual_inf"].get<double>() <= 1e-10);
    CHECK(j["outputs"]["curvature"].get<double>() < 0.0);

    CHECK(run("solve-quad --w nonsense").exit_code == 2);
    CHECK(run("solve-quad --w 0.99,0.0").exit_code == 2);
}

TEST_CASE("scan writes the CSV contract") {
    const std::string path = "scan.tmp.csv";
    const auto res = run("scan --grid 4 --rmax 0.4 --out " + path);
    CHECK(res.exit_code == 0);
    const std::string csv = slurp(path);
    CHECK(csv.rfind("re_w,im_w,c0,c1,status\n", 0) == 0);
    int rows = 0;
    std::istringstream ss(csv);
    std::string line;
    while (std::getline(ss, line)) ++rows;
    CHECK(rows == 4 * 4 + 1);
    const json j = json::parse(res.out);
    CHECK(j["outputs"]["c0_max"].get<double>() <= 5.7);
    std::remove(path.c_str());
}

TEST_CASE("scan output is identical across worker counts") {
    const std::string p1 = "scan_t1.tmp.csv", p2 = "scan_t2.tmp.csv";
    const auto r1 = run("scan --grid 4 --rmax 0.3 --out " + p1);
    setenv("SCHERK_THREADS", "1", 1);
    const auto r2 = run("scan --grid 4 --rmax 0.3 --out " + p2);
    unsetenv("SCHERK_THREADS");
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    CHECK(slurp(p1) == slurp(p2));
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("verify bounds suite passes and prints per-check lines") {
    const auto res = run("verify --suite bounds");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("PASS") != std::string::npos);
    CHECK(res.out.find("r_diamond") != std::string::npos);
    CHECK(res.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify with an impossible tolerance scale exits 1") {
    const auto res = run("verify --suite bounds --tol-scale 1e-9");
    CHECK(res.exit_code == 1);
    CHECK(res.out.find("FAIL") != std::string::npos);
}

TEST_CASE("unknown flags and subcommands exit 2") {
    CHECK(run("family --t notanumber").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
}
