#include "scherk/quad_solver.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "scherk/family.hpp"
#include "scherk/numerics.hpp"

namespace scherk::quad {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
const Complex kI{0.0, 1.0};

double mod_2pi(double x) {
    double m = std::fmod(x, kTwoPi);
    if (m < 0) m += kTwoPi;
    return m;
}

// wrapped angular distance
double ang_dist(double a, double b) {
    double d = std::fabs(mod_2pi(a) - mod_2pi(b));
    return std::min(d, kTwoPi - d);
}

}  // namespace

Complex QuadConfig::vertex(int k) const {
    return std::polar(1.0, theta[k & 3]);
}

Complex QuadConfig::preimage(int k) const {
    return std::polar(1.0, alpha[k & 3]);
}

Complex QuadConfig::residue(int k) const {
    return (vertex(k) - vertex(k + 1)) / (kTwoPi * kI);
}

Complex QuadConfig::fz0() const {
    Complex s{0.0, 0.0};
    for (int k = 0; k < 4; ++k) s += residue(k) / preimage(k);
    return -s;
}

Complex QuadConfig::boundary_average() const {
    // F takes the value a_k on the arc ending at alpha_k.
    Complex s{0.0, 0.0};
    for (int k = 0; k < 4; ++k) {
        const double gap = mod_2pi(alpha[k] - alpha[(k + 3) & 3]);
        s += vertex(k) * gap;
    }
    return s / kTwoPi;
}

Complex DilatationTarget::q(Complex z) const {
    return (w + mu * z) / (1.0 + std::conj(w) * mu * z);
}

DilatationTarget target_dilatation(Complex w) {
    if (std::abs(w) >= 1.0) throw DomainError("target_dilatation: |w| must be < 1");
    const Complex w4 = w * w * w * w;
    return {w, kI * (1.0 - w4) / std::abs(1.0 - w4)};
}

RationalEW rational_ew(const QuadConfig& config, Complex z) {
    RationalEW out{{0.0, 0.0}, {0.0, 0.0}};
    for (int k = 0; k < 4; ++k) {
        const Complex b = config.preimage(k);
        if (std::abs(z - b) < 1e-12) throw PoleError("rational_ew: z at a pole");
        const Complex d = config.residue(k);
        out.fz += d / (z - b);
        out.gprime -= std::conj(d) / (z - b);
    }
    return out;
}

std::vector<double> residual(const QuadConfig& config) {
    for (int k = 0; k < 4; ++k) {
        const double gap = mod_2pi(config.alpha[k] - config.alpha[(k + 3) & 3]);
        if (gap < 1e-6)
            throw DegeneracyError("residual: coincident preimage points");
    }

    // A(z) = gprime * prod(z-b_k) and B(z) = fz * prod(z-b_k) as cubic
    // coefficient arrays (leading terms cancel by telescoping).
    std::array<Complex, 4> A{}, B{};
    for (int k = 0; k < 4; ++k) {
        // prod_{j != k} (z - b_j)
        std::array<Complex, 4> prod{Complex{1.0, 0.0}, {}, {}, {}};
        int deg = 0;
        for (int j = 0; j < 4; ++j) {
            if (j == k) continue;
            const Complex root = config.preimage(j);
            for (int c = deg + 1; c > 0; --c)
                prod[c] = prod[c - 1] - root * prod[c];
            prod[0] = -root * prod[0];
            ++deg;
        }
        const Complex d = config.residue(k);
        for (int c = 0; c < 4; ++c) {
            B[c] += d * prod[c];
            A[c] -= std::conj(d) * prod[c];
        }
    }

    const DilatationTarget tgt = target_dilatation(config.w);
    const Complex l1[2] = {Complex{1.0, 0.0}, std::conj(config.w) * tgt.mu};
    const Complex l2[2] = {config.w, tgt.mu};
    Complex sq1[3] = {l1[0] * l1[0], 2.0 * l1[0] * l1[1], l1[1] * l1[1]};
    Complex sq2[3] = {l2[0] * l2[0], 2.0 * l2[0] * l2[1], l2[1] * l2[1]};

    std::array<Complex, 6> R{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j)
            R[i + j] += A[i] * sq1[j] - sq2[j] * B[i];

    std::vector<double> out;
    out.reserve(15);
    for (const Complex& c : R) {
        out.push_back(c.real());
        out.push_back(c.imag());
    }
    const Complex f0 = config.boundary_average();
    out.push_back(f0.real());
    out.push_back(f0.imag());
    out.push_back(config.fz0().imag());
    return out;
}

double residual_inf(const QuadConfig& config) {
    double m = 0.0;
    for (double r : residual(config)) m = std::max(m, std::fabs(r));
    return m;
}

QuadConfig canonicalize(QuadConfig config) {
    std::array<double, 4> al{}, th{};
    for (int k = 0; k < 4; ++k) {
        al[k] = mod_2pi(config.alpha[k]);
        th[k] = config.theta[k];
    }
    int r = 0;
    for (int k = 1; k < 4; ++k)
        if (al[k] < al[r]) r = k;

    QuadConfig out;
    out.w = config.w;
    for (int k = 0; k < 4; ++k) {
        out.alpha[k] = al[(k + r) & 3];
        out.theta[k] = th[(k + r) & 3];
    }
    for (int k = 1; k < 4; ++k)
        while (out.alpha[k] < out.alpha[k - 1])
            out.alpha[k] += kTwoPi;

    // unwrap theta from a base angle in [0, 2pi)
    std::array<double, 4> gaps{};
    for (int k = 1; k < 4; ++k)
        gaps[k] = mod_2pi(out.theta[k] - out.theta[k - 1]);
    out.theta[0] = mod_2pi(out.theta[0]);
    for (int k = 1; k < 4; ++k)
        out.theta[k] = out.theta[k - 1] + gaps[k];

    // gauge: f_z(0) has positive real part (f -> -f flips all vertices)
    if (out.fz0().real() < 0.0) {
        for (int k = 0; k < 4; ++k) out.theta[k] += kPi;
        out.theta[0] = mod_2pi(out.theta[0]);
        for (int k = 1; k < 4; ++k)
            out.theta[k] = out.theta[k - 1] + gaps[k];
    }
    return out;
}

double config_distance(const QuadConfig& a, const QuadConfig& b) {
    double m = std::abs(a.w - b.w);
    for (int k = 0; k < 4; ++k) {
        m = std::max(m, ang_dist(a.alpha[k], b.alpha[k]));
        m = std::max(m, ang_dist(a.theta[k], b.theta[k]));
    }
    return m;
}

QuadConfig trapezoid_seed(double t) {
    if (!(t > family::t_critical()) || t > kPi / 2 + 1e-14)
        throw DomainError("trapezoid_seed: t must lie in (t_critical, pi/2]");
    const auto geo = family::trapezoid_geometry(t);
    const double z0 = family::z_center(t);

    QuadConfig cfg;
    cfg.w = kI * family::a_of_t(t);
    // Vertices i * e^{-i tau} * {1, e^{it}, e^{is}, e^{i(t+s)}}; preimages are
    // the pullbacks of {i, -1, -i, 1} under the disk automorphism centred at
    // z_center (the transport that moves the centre to the origin).
    const double base = kPi / 2 - geo.tau;
    const double phases[4] = {0.0, geo.t, geo.s, geo.t + geo.s};
    for (int k = 0; k < 4; ++k)
        cfg.theta[k] = base + phases[k];
    Complex pole = kI;
    for (int k = 0; k < 4; ++k) {
        const Complex pulled = (pole - z0) / (1.0 - z0 * pole);
        cfg.alpha[k] = mod_2pi(std::arg(pulled));
        pole *= kI;
    }
    return canonicalize(cfg);
}

namespace {

// LM unknowns: (base angle, three log-gap ratios) per circle.  Gaps are
// softmax-normalized to sum to 2pi with the fourth log fixed to zero, which
// keeps every gap positive and the points on the circle by construction.
std::array<double, 4> params_to_angles(double base, double u1, double u2, double u3) {
    const double cap = 30.0;  // keeps exp() finite under wild LM trial steps
    const double e1 = std::exp(std::clamp(u1, -cap, cap));
    const double e2 = std::exp(std::clamp(u2, -cap, cap));
    const double e3 = std::exp(std::clamp(u3, -cap, cap));
    const double sum = e1 + e2 + e3 + 1.0;
    const double g1 = kTwoPi * e1 / sum, g2 = kTwoPi * e2 / sum, g3 = kTwoPi * e3 / sum;
    return {base, base + g1, base + g1 + g2, base + g1 + g2 + g3};
}

QuadConfig params_to_config(const std::vector<double>& x, Complex w) {
    QuadConfig c;
    c.w = w;
    c.alpha = params_to_angles(x[0], x[1], x[2], x[3]);
    c.theta = params_to_angles(x[4], x[5], x[6], x[7]);
    return c;
}

std::vector<double> config_to_params(const QuadConfig& c) {
    auto pack = [](const std::array<double, 4>& ang, double* out) {
        double g[4];
        for (int k = 0; k < 4; ++k)
            g[k] = mod_2pi(ang[(k + 1) & 3] - ang[k]);
        out[0] = ang[0];
        for (int k = 0; k < 3; ++k) out[k + 1] = std::log(g[k] / g[3]);
    };
    std::vector<double> x(8);
    pack(c.alpha, &x[0]);
    pack(c.theta, &x[4]);
    return x;
}

struct LmOutcome {
    QuadConfig config;
    double residual_inf;
    int iterations;
};

LmOutcome lm_solve_at(Complex w, const QuadConfig& start) {
    numerics::LeastSquaresOptions opts;
    opts.max_iterations = 150;
    opts.residual_tol = 5e-12;
    opts.step_tol = 1e-15;
    opts.initial_damping = 1e-4;
    const auto fn = [w](const std::vector<double>& x) {
        return residual(params_to_config(x, w));
    };
    const auto res = numerics::solve_least_squares(fn, config_to_params(start), opts);
    return {params_to_config(res.x, w), res.residual_inf, res.iterations};
}

double inverse_a_of_t(double r) {
    const double lo = family::t_critical() + 1e-9, hi = kPi / 2;
    if (r <= family::a_of_t(hi)) return hi;
    if (r >= family::a_of_t(lo)) return lo;
    return numerics::find_root_bisect(
        [r](double t) { return family::a_of_t(t) - r; },
        numerics::RootBracket{lo, hi, 1e-13});
}

}  // namespace

SolveResult solve_quad(Complex w, std::optional<QuadConfig> seed) {
    if (std::abs(w) > kWCap + 1e-12)
        throw DomainError("solve_quad: |w| exceeds the solver cap 0.95");

    QuadConfig current;
    Complex w_now;
    if (seed) {
        current = canonicalize(*seed);
        w_now = current.w;
    } else {
        current = trapezoid_seed(inverse_a_of_t(std::abs(w)));
        w_now = current.w;
    }

    SolveResult result;
    int total_iters = 0, steps = 0;

    // Straight-segment continuation from w_now to w with step halving.
    const double seg = std::abs(w - w_now);
    double step = (seg == 0.0) ? 1.0 : std::min(1.0, 0.03 / seg);
    double progress = 0.0;
    Complex last_good_w = w_now;
    while (true) {
        const double next = std::min(1.0, progress + step);
        const Complex w_try = w_now + (w - w_now) * next;
        try {
            const double fz0_before = std::abs(current.fz0());
            const LmOutcome out = lm_solve_at(w_try, current);
            const double dw = std::abs(w_try - last_good_w);
            const double jump = std::fabs(std::abs(out.config.fz0()) - fz0_before);
            if (jump > 10.0 * dw + 1e-3)
                throw ConvergenceError("solve_quad: |f_z(0)| jump guard tripped",
                                       {}, jump);
            current = out.config;
            total_iters += out.iterations;
            ++steps;
            progress = next;
            last_good_w = w_try;
            result.residual_inf = out.residual_inf;
            if (progress >= 1.0) break;
            step = std::min(step * 2.0, 1.0 - progress);
        } catch (const ConvergenceError&) {
            step *= 0.5;
            if (step * seg < 1e-5 && seg > 0.0)
                throw ContinuationError("solve_quad: continuation stalled", last_good_w);
            if (seg == 0.0)
                throw;  // single solve at the seed's own w failed
        }
    }

    result.config = canonicalize(current);
    result.lm_iterations = total_iters;
    result.continuation_steps = steps;
    return result;
}

CentreCurvature centre_curvature(const QuadConfig& config) {
    const double f = std::abs(config.fz0());
    if (f < 1e-300) throw DegeneracyError("centre_curvature: f_z(0) = 0");
    const double r2 = std::norm(config.w);
    const double one_plus = (1.0 + r2) * (1.0 + r2);
    CentreCurvature out;
    out.gauss = -4.0 * (1.0 - r2) * (1.0 - r2) / (one_plus * one_plus * f * f);
    out.hopf = 4.0 / (one_plus * f * f);
    return out;
}

ScanResult heinz_hopf_scan(int grid_n, double r_max, int n_threads) {
    if (grid_n < 2) throw DomainError("heinz_hopf_scan: grid_n must be >= 2");
    if (!(r_max > 0.0) || r_max > 0.9)
        throw DomainError("heinz_hopf_scan: r_max must lie in (0, 0.9]");
    if (n_threads <= 0) {
        n_threads = static_cast<int>(std::thread::hardware_concurrency());
        if (n_threads <= 0) n_threads = 1;
    }

    ScanResult scan;
    scan.grid_n = grid_n;
    scan.r_max = r_max;
    scan.cells.resize(static_cast<std::size_t>(grid_n) * grid_n);
    std::vector<QuadConfig> ring(grid_n);
    // plain char flags: distinct elements stay safe to write concurrently
    std::vector<char> ring_ok(grid_n, 0);

    // centre ring: one solve at w = 0 replicated over all angles
    {
        const SolveResult sr = solve_quad(Complex{0.0, 0.0});
        const CentreCurvature cc = centre_curvature(sr.config);
        for (int j = 0; j < grid_n; ++j) {
            scan.cells[j] = {Complex{0.0, 0.0}, -cc.gauss, cc.hopf, true};
            ring[j] = sr.config;
            ring_ok[j] = 1;
        }
    }

    for (int i = 1; i < grid_n; ++i) {
        const double r = r_max * i / (grid_n - 1);
        std::vector<QuadConfig> next(grid_n);
        std::vector<char> next_ok(grid_n, 0);

        auto solve_cell = [&](int j) {
            const double phi = kTwoPi * j / grid_n;
            const Complex w = std::polar(r, phi);
            // seed from the nearest converged cell of the previous ring
            int src = -1;
            for (int off = 0; off < grid_n && src < 0; ++off) {
                const int cand1 = (j + off) % grid_n, cand2 = (j - off % grid_n + grid_n) % grid_n;
                if (ring_ok[cand1]) src = cand1;
                else if (ring_ok[cand2]) src = cand2;
            }
            ScanCell& cell = scan.cells[static_cast<std::size_t>(i) * grid_n + j];
            cell.w = w;
            if (src < 0) return;
            try {
                const SolveResult sr = solve_quad(w, ring[src]);
                const CentreCurvature cc = centre_curvature(sr.config);
                cell.c0 = -cc.gauss;
                cell.c1 = cc.hopf;
                cell.converged = true;
                next[j] = sr.config;
                next_ok[j] = 1;
            } catch (const Error&) {
                cell.converged = false;
            }
        };

        if (n_threads == 1 || grid_n < 4) {
            for (int j = 0; j < grid_n; ++j) solve_cell(j);
        } else {
            std::vector<std::thread> pool;
            const int nt = std::min(n_threads, grid_n);
            pool.reserve(nt);
            for (int tid = 0; tid < nt; ++tid) {
                pool.emplace_back([&, tid] {
                    for (int j = tid; j < grid_n; j += nt) solve_cell(j);
                });
            }
            for (auto& th : pool) th.join();
        }
        ring = std::move(next);
        ring_ok = std::move(next_ok);
    }

    for (const ScanCell& c : scan.cells) {
        if (!c.converged) {
            scan.failures++;
            continue;
        }
        if (c.c0 > scan.c0_max) {
            scan.c0_max = c.c0;
            scan.argmax_c0 = c.w;
        }
        if (c.c1 > scan.c1_max) {
            scan.c1_max = c.c1;
            scan.argmax_c1 = c.w;
        }
    }
    return scan;
}

}  // namespace scherk::quad
