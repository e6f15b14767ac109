#include "acfh/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "acfh/euclid_eigen.hpp"
#include "acfh/fields.hpp"
#include "acfh/heis_eigen.hpp"
#include "acfh/heis_polar.hpp"
#include "acfh/heisenberg.hpp"
#include "acfh/mc.hpp"
#include "acfh/poly.hpp"
#include "acfh/quadrature.hpp"
#include "acfh/table.hpp"

namespace acfh {

namespace {

constexpr double pi = std::numbers::pi;

CheckRow two_sided(std::string name, double measured, double expected, double tol) {
    return CheckRow{std::move(name), measured, expected, tol,
                    std::abs(measured - expected) <= tol};
}

CheckRow at_least(std::string name, double measured, double bound, double tol) {
    return CheckRow{std::move(name), measured, bound, tol, measured >= bound - tol};
}

CheckRow at_most(std::string name, double measured, double bound, double tol) {
    return CheckRow{std::move(name), measured, bound, tol, measured <= bound + tol};
}

void finalize(Criterion& c) {
    c.pass = true;
    for (const auto& r : c.rows) c.pass = c.pass && r.pass;
}

// Random point with gauge norm in [0.5, 2], kept away from the center axis.
HPoint random_off_axis_point(std::mt19937_64& rng, int n = 1) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> ur(0.5, 2.0);
    for (;;) {
        HPoint p;
        p.x.resize(n);
        p.y.resize(n);
        double s2 = 0.0;
        for (int i = 0; i < n; ++i) {
            p.x[i] = u(rng);
            p.y[i] = u(rng);
            s2 += p.x[i] * p.x[i] + p.y[i] * p.y[i];
        }
        p.t = u(rng);
        const double g = gauge_norm(p);
        if (g < 1e-3 || s2 < 1e-3 * g * g) continue;
        return dilate(ur(rng) / g, p);
    }
}

Criterion criterion_sl_cap(const VerifyOptions& opt) {
    Criterion c{1, "sl-eigen pi/2 cap: lambda = 8, alpha = 2", false, {}};
    const EigenSolution s = sl_eigen(phi_interval(0.0, pi / 2.0), opt.mesh);
    c.rows.push_back(two_sided("lambda(0,pi/2)", s.lambda, 8.0, 8.0 * 1e-6));
    c.rows.push_back(two_sided("alpha(0,pi/2)", s.alpha, 2.0, 1e-8));
    finalize(c);
    return c;
}

Criterion criterion_euclid_cap(const VerifyOptions& opt) {
    Criterion c{2, "euclidean hemisphere: lambda = 2, alpha = 1", false, {}};
    const EigenSolution s = cap_eigenvalue(EuclidCap{pi / 2.0, 3}, opt.mesh);
    c.rows.push_back(two_sided("lambda_E(pi/2, n=3)", s.lambda, 2.0, 1e-8));
    c.rows.push_back(two_sided("characteristic_constant(2, 3)", characteristic_constant(2.0, 3), 1.0, 1e-12));
    finalize(c);
    return c;
}

Criterion criterion_bridge(const VerifyOptions& opt) {
    Criterion c{3, "bridge lambda_H = 4 lambda_E across cap angles", false, {}};
    const double angles[] = {pi / 6.0, pi / 4.0, pi / 3.0, pi / 2.0, 2.0 * pi / 3.0};
    for (const double phi0 : angles) {
        const BridgeResult b = euclid_bridge(phi0, opt.mesh);
        c.rows.push_back(two_sided("lambda_H/lambda_E at phi0=" + format_double(phi0),
                                   b.lambda_h / b.lambda_e, 4.0, 4.0 * 1e-5));
    }
    finalize(c);
    return c;
}

Criterion criterion_linear_quotient(const VerifyOptions& opt) {
    Criterion c{4, "boundary quotient of (ax+by)^+ and the beta <= 4 witness", false, {}};
    std::mt19937_64 rng(opt.seed + 4);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int k = 0; k < 5; ++k) {
        double a = 0.0, b = 0.0;
        do {
            a = u(rng);
            b = u(rng);
        } while (a * a + b * b < 0.25);
        const HTwoPhasePair pair = fields::linear_pair(a, b);
        const double qp = boundary_quotient(pair.plus, opt.hgrid);
        const double qm = boundary_quotient(pair.minus, opt.hgrid);
        c.rows.push_back(two_sided("quotient((ax+by)^+) #" + std::to_string(k + 1), qp, 2.0, 1e-3));
        c.rows.push_back(two_sided("log-derivative at beta=4 #" + std::to_string(k + 1),
                                   qp + qm - 4.0, 0.0, 2e-3));
        c.rows.push_back(at_most("log-derivative at beta=4.5 #" + std::to_string(k + 1),
                                 qp + qm - 4.5, -0.5, 2e-3));
    }
    finalize(c);
    return c;
}

Criterion criterion_j8_constancy(const VerifyOptions& opt) {
    Criterion c{5, "J_8 constant in r on the t-pair", false, {}};
    const HTwoPhasePair pair = fields::t_pair(1.25, 0.75);
    const double j1 = j_beta(pair, 1.0, 8.0, opt.hgrid);
    for (const double r : {0.25, 0.5, 0.75, 1.0}) {
        const double jr = j_beta(pair, r, 8.0, opt.hgrid);
        c.rows.push_back(two_sided("J_8(r=" + format_double(r) + ")/J_8(1)", jr / j1, 1.0, 2e-3));
    }
    finalize(c);
    return c;
}

Criterion criterion_psi(const VerifyOptions& opt) {
    Criterion c{6, "psi branch values, convexity, and the sum bound", false, {}};
    c.rows.push_back(two_sided("psi(1/4)", psi(0.25), 1.5, 1e-15));
    c.rows.push_back(two_sided("psi(1/2)", psi(0.5), 1.0, 1e-15));

    const int n = 1000;
    double min_second = 1e300, max_first = -1e300;
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = psi((i + 1) / static_cast<double>(n + 1));
    for (int i = 0; i + 1 < n; ++i) max_first = std::max(max_first, vals[i + 1] - vals[i]);
    for (int i = 0; i + 2 < n; ++i)
        min_second = std::min(min_second, vals[i + 2] - 2.0 * vals[i + 1] + vals[i]);
    c.rows.push_back(at_least("min second difference of psi", min_second, 0.0, 1e-10));
    c.rows.push_back(at_most("max first difference of psi", max_first, 0.0, 1e-15));

    std::mt19937_64 rng(opt.seed + 6);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double min_sum = 1e300;
    for (int k = 0; k < 1000; ++k) {
        double s1 = u(rng);
        while (s1 <= 0.0 || s1 >= 1.0) s1 = u(rng);
        double s2 = u(rng) * (1.0 - s1);
        while (s2 <= 0.0) s2 = u(rng) * (1.0 - s1);
        min_sum = std::min(min_sum, cap_sum_bound(s1, s2));
    }
    c.rows.push_back(at_least("min psi(s1)+psi(s2), s1+s2 <= 1", min_sum, 2.0, 1e-12));
    finalize(c);
    return c;
}

Criterion criterion_fundamental(const VerifyOptions& opt) {
    Criterion c{7, "fundamental solution |P|^{2-Q} is harmonic off the pole", false, {}};
    std::mt19937_64 rng(opt.seed + 7);
    for (const int n : {1, 2}) {
        double worst_analytic = 0.0, worst_fd = 0.0;
        HField pw;
        const double expo = 2.0 - (2.0 * n + 2.0);
        pw.value = [expo](const HPoint& p) { return std::pow(gauge_norm(p), expo); };
        for (int k = 0; k < 100; ++k) {
            const HPoint p = random_off_axis_point(rng, n);
            worst_analytic = std::max(worst_analytic, std::abs(fundamental_solution_residual(p, n)));
            worst_fd = std::max(worst_fd, std::abs(sublaplacian(pw, p)));
        }
        c.rows.push_back(two_sided("max |analytic residual|, n=" + std::to_string(n),
                                   worst_analytic, 0.0, 1e-10));
        c.rows.push_back(two_sided("max |finite-difference residual|, n=" + std::to_string(n),
                                   worst_fd, 0.0, 1e-5));
    }
    finalize(c);
    return c;
}

Criterion criterion_polar_identities(const VerifyOptions& opt) {
    Criterion c{8, "polar gradient and sublaplacian identities", false, {}};
    std::mt19937_64 rng(opt.seed + 8);
    double e_gr = 0.0, e_gp = 0.0, e_gt = 0.0;
    double e_pr = 0.0, e_rt = 0.0, e_pt = 0.0;
    double e_lr = 0.0, e_lp = 0.0, e_lt = 0.0;
    const auto dot2 = [](const std::array<double, 2>& a, const std::array<double, 2>& b) {
        return a[0] * b[0] + a[1] * b[1];
    };
    for (int k = 0; k < 10000; ++k) {
        const HPoint p = random_off_axis_point(rng);
        const double x = p.x[0], y = p.y[0], t = p.t;
        const double s2 = x * x + y * y;
        const double rho = gauge_norm(p);
        const PolarGradients g = polar_gradients(p);
        const PolarLaplacians l = polar_laplacians(p);
        const double nr = dot2(g.grad_rho, g.grad_rho);
        const double np = dot2(g.grad_phi, g.grad_phi);
        const double nt = dot2(g.grad_theta, g.grad_theta);

        e_gr = std::max(e_gr, std::abs(nr - s2 / (rho * rho)) / (s2 / (rho * rho)));
        e_gp = std::max(e_gp, std::abs(np - 4.0 * s2 / std::pow(rho, 4.0)) / (4.0 * s2 / std::pow(rho, 4.0)));
        e_gt = std::max(e_gt, std::abs(nt - 1.0 / s2) * s2);

        e_pr = std::max(e_pr, std::abs(dot2(g.grad_phi, g.grad_rho)) / std::sqrt(np * nr));
        e_rt = std::max(e_rt, std::abs(dot2(g.grad_rho, g.grad_theta) + t / (rho * rho * rho)) /
                                  std::sqrt(nr * nt));
        e_pt = std::max(e_pt, std::abs(dot2(g.grad_phi, g.grad_theta) - 2.0 * s2 / std::pow(rho, 4.0)) /
                                  std::sqrt(np * nt));

        const double scale = 1.0 / (rho * rho);
        e_lr = std::max(e_lr, std::abs(l.lap_rho - 3.0 * s2 / std::pow(rho, 3.0)) /
                                  std::max(scale, 3.0 * s2 / std::pow(rho, 3.0)));
        e_lp = std::max(e_lp, std::abs(l.lap_phi - 4.0 * (t / (rho * rho)) / (rho * rho)) / scale);
        e_lt = std::max(e_lt, std::abs(l.lap_theta) * s2);
    }
    c.rows.push_back(two_sided("|grad rho|^2 = (x^2+y^2)/rho^2", e_gr, 0.0, 1e-10));
    c.rows.push_back(two_sided("|grad phi|^2 = 4(x^2+y^2)/rho^4", e_gp, 0.0, 1e-10));
    c.rows.push_back(two_sided("|grad theta|^2 = 1/(x^2+y^2)", e_gt, 0.0, 1e-10));
    c.rows.push_back(two_sided("<grad phi, grad rho> = 0", e_pr, 0.0, 1e-10));
    c.rows.push_back(two_sided("<grad rho, grad theta> = -cos(phi)/rho", e_rt, 0.0, 1e-10));
    c.rows.push_back(two_sided("<grad phi, grad theta> = 2(x^2+y^2)/rho^4", e_pt, 0.0, 1e-10));
    c.rows.push_back(two_sided("lap rho = 3(x^2+y^2)/rho^3", e_lr, 0.0, 1e-10));
    c.rows.push_back(two_sided("lap phi = 4 cos(phi)/rho^2", e_lp, 0.0, 1e-10));
    c.rows.push_back(two_sided("lap theta = 0", e_lt, 0.0, 1e-10));
    finalize(c);
    return c;
}

Criterion criterion_volume(const VerifyOptions& opt) {
    Criterion c{9, "gauge-ball volume pi^2 r^4 / 2 and the sampling oracle", false, {}};
    for (const double r : {1.0, 1.5}) {
        const ProductGrid ball = koranyi_ball_grid(r, opt.hgrid.n_rho, opt.hgrid.n_phi, opt.hgrid.n_theta);
        const double vol = integrate(ball, [](double, double, double) { return 1.0; });
        const double exact = pi * pi * std::pow(r, 4.0) / 2.0;
        c.rows.push_back(two_sided("volume(B_" + format_double(r) + ")/exact", vol / exact, 1.0, 1e-6));
        if (r == 1.0) {
            const double mc_vol = mc::koranyi_ball_integral(
                [](double, double, double) { return 1.0; }, r, opt.mc_samples, opt.seed + 9);
            c.rows.push_back(two_sided("quadrature vs Monte Carlo", vol / mc_vol, 1.0, 1e-2));
        }
    }
    finalize(c);
    return c;
}

Criterion criterion_phi(const VerifyOptions& opt) {
    Criterion c{10, "Euclidean Phi on the split-plane pair", false, {}};
    const TwoPhasePair pair = fields::x3_pair();
    for (const double r : {0.5, 1.0}) {
        const double v = phi_functional(pair, r, opt.egrid);
        c.rows.push_back(two_sided("Phi(" + format_double(r) + ")/pi^2", v / (pi * pi), 1.0, 1e-3));
    }
    c.rows.push_back(two_sided("log-derivative", phi_log_derivative(pair, opt.egrid), 0.0, 2e-3));
    finalize(c);
    return c;
}

Criterion criterion_lower_bound(const VerifyOptions& opt) {
    Criterion c{11, "two-sided lower-bound comparison on the t-pair", false, {}};
    const HTwoPhasePair pair = fields::t_pair();
    const double l1 = sl_eigen(phi_interval(0.0, pi / 2.0), opt.mesh).lambda;
    const double l2 = sl_eigen(phi_interval(pi / 2.0, pi), opt.mesh).lambda;
    const LowerBoundReport rep = lower_bound_check(pair, {l1, l2}, opt.hgrid);
    c.rows.push_back(two_sided("left side (quotient sum)", rep.left, 8.0, 2e-3));
    c.rows.push_back(two_sided("right side 2*sum(sqrt(1+lambda)-1)", rep.right, 8.0, 2e-3));
    c.rows.push_back(CheckRow{"left >= right - tol", rep.left - rep.right, 0.0, rep.tolerance,
                              rep.has_verdict && rep.pass});
    finalize(c);
    return c;
}

Criterion criterion_gradient_split(const VerifyOptions& opt) {
    Criterion c{12, "gradient split sums to the squared horizontal gradient", false, {}};
    std::mt19937_64 rng(opt.seed + 12);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int fno = 0; fno < 5; ++fno) {
        Poly3 p;
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; i + j <= 2; ++j)
                for (int k = 0; k <= 1; ++k)
                    p = p + Poly3::monomial(coef(rng), i, j, k);
        const HField u = fields::poly_field(p);
        double worst = 0.0;
        for (int k = 0; k < 10000; ++k) {
            const HPoint q = random_off_axis_point(rng);
            const GradientSplit gs = gradient_split(u, q);
            const double g2 = horizontal_gradient_sq(u, q);
            worst = std::max(worst, std::abs(gs.radial_sq + gs.angular_sq - g2) /
                                        std::max(g2, 1e-12));
        }
        c.rows.push_back(two_sided("field #" + std::to_string(fno + 1) + " max relative defect",
                                   worst, 0.0, 1e-10));
    }
    finalize(c);
    return c;
}

} // namespace

std::vector<Criterion> run_acceptance(const VerifyOptions& opt) {
    std::vector<Criterion> out;
    out.push_back(criterion_sl_cap(opt));
    out.push_back(criterion_euclid_cap(opt));
    out.push_back(criterion_bridge(opt));
    out.push_back(criterion_linear_quotient(opt));
    out.push_back(criterion_j8_constancy(opt));
    out.push_back(criterion_psi(opt));
    out.push_back(criterion_fundamental(opt));
    out.push_back(criterion_polar_identities(opt));
    out.push_back(criterion_volume(opt));
    out.push_back(criterion_phi(opt));
    out.push_back(criterion_lower_bound(opt));
    out.push_back(criterion_gradient_split(opt));
    return out;
}

bool all_pass(const std::vector<Criterion>& cs) {
    for (const auto& c : cs)
        if (!c.pass) return false;
    return true;
}

} // namespace acfh
