#include "acfh/sturm_liouville.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "acfh/errors.hpp"

namespace acfh {

namespace {

// Number of eigenvalues of the symmetric tridiagonal (d, e) below x,
// via the Sturm sequence of the shifted LDL^T factorization.
int count_below(const std::vector<double>& d, const std::vector<double>& e, double x) {
    int count = 0;
    double q = d[0] - x;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
        if (std::abs(q) < 1e-300) q = std::copysign(1e-300, q == 0.0 ? -1.0 : q);
        q = d[i] - x - e[i - 1] * e[i - 1] / q;
        if (q < 0.0) ++count;
    }
    return count;
}

double smallest_eigenvalue(const std::vector<double>& d, const std::vector<double>& e) {
    double lo = d[0], hi = d[0];
    for (std::size_t i = 0; i < d.size(); ++i) {
        const double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < d.size() ? std::abs(e[i]) : 0.0);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (count_below(d, e, mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

// Tridiagonal solve with partial pivoting (matrix may be nearly singular
// during inverse iteration).
std::vector<double> solve_tridiag(std::vector<double> dl, std::vector<double> d,
                                  std::vector<double> du, std::vector<double> b) {
    const std::size_t n = d.size();
    std::vector<double> du2(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(dl[i]) > std::abs(d[i])) {
            std::swap(d[i], dl[i]);
            std::swap(du[i], d[i + 1]);
            if (i + 2 < n) std::swap(du2[i], du[i + 1]);
            std::swap(b[i], b[i + 1]);
        }
        if (d[i] == 0.0) d[i] = 1e-300;
        const double m = dl[i] / d[i];
        d[i + 1] -= m * du[i];
        if (i + 2 < n) du[i + 1] -= m * du2[i];
        b[i + 1] -= m * b[i];
    }
    if (d[n - 1] == 0.0) d[n - 1] = 1e-300;
    std::vector<double> x(n, 0.0);
    x[n - 1] = b[n - 1] / d[n - 1];
    if (n >= 2) x[n - 2] = (b[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
    for (std::size_t k = n; k-- > 2;) {
        const std::size_t i = k - 2;
        x[i] = (b[i] - du[i] * x[i + 1] - (i + 2 < n ? du2[i] * x[i + 2] : 0.0)) / d[i];
    }
    return x;
}

} // namespace

SlMeshSolution sl_fv_smallest(const SlProblem& p, int n_cells) {
    if (n_cells < 2) throw std::invalid_argument("sl_fv_smallest: need at least 2 cells");
    if (!(p.a < p.b)) throw std::invalid_argument("sl_fv_smallest: need a < b");
    const int n = n_cells;
    const double h = (p.b - p.a) / n;

    std::vector<double> diag(n, 0.0), off(n - 1, 0.0), mass(n, 0.0), centers(n, 0.0);
    for (int j = 0; j < n; ++j) {
        const double c = p.a + (j + 0.5) * h;
        centers[j] = c;
        mass[j] = p.weight(c) * h;
        if (!(mass[j] > 0.0))
            throw std::invalid_argument("sl_fv_smallest: weight must be positive at cell centers");
    }
    for (int j = 0; j + 1 < n; ++j) {
        const double wf = p.weight(p.a + (j + 1) * h) * p.scale / h;
        off[j] = -wf;
        diag[j] += wf;
        diag[j + 1] += wf;
    }
    if (p.dirichlet_left) diag[0] += 2.0 * p.weight(p.a) * p.scale / h;
    if (p.dirichlet_right) diag[n - 1] += 2.0 * p.weight(p.b) * p.scale / h;

    // Similarity transform of the pencil (A, M) to a standard symmetric
    // tridiagonal problem with d_i = a_i/m_i, e_i = off_i/sqrt(m_i m_{i+1}).
    std::vector<double> d(n), e(n - 1);
    for (int j = 0; j < n; ++j) d[j] = diag[j] / mass[j];
    for (int j = 0; j + 1 < n; ++j) e[j] = off[j] / std::sqrt(mass[j] * mass[j + 1]);

    const double lambda = smallest_eigenvalue(d, e);

    // Inverse iteration at a slightly shifted eigenvalue estimate.
    const double shift = lambda - 1e-10 * std::max(1.0, std::abs(lambda));
    std::vector<double> v(n, 1.0);
    for (int j = 0; j < n; ++j) v[j] += 1e-3 * std::sin(7.0 * (j + 1));
    for (int it = 0; it < 4; ++it) {
        std::vector<double> dl(e.begin(), e.end()), du(e.begin(), e.end()), dm(n);
        for (int j = 0; j < n; ++j) dm[j] = d[j] - shift;
        v = solve_tridiag(dl, dm, du, v);
        double nrm = 0.0;
        for (double z : v) nrm += z * z;
        nrm = std::sqrt(nrm);
        for (double& z : v) z /= nrm;
    }

    SlMeshSolution out;
    out.lambda = lambda;
    out.centers = std::move(centers);
    out.values.resize(n);
    for (int j = 0; j < n; ++j) out.values[j] = v[j] / std::sqrt(mass[j]);
    double s = 0.0, mx = 0.0;
    for (double z : out.values) {
        s += z;
        mx = std::max(mx, std::abs(z));
    }
    const double sign = s < 0.0 ? -1.0 : 1.0;
    for (double& z : out.values) z *= sign / mx;
    return out;
}

SlResult sl_solve(const SlProblem& p, int n_cells) {
    const SlMeshSolution coarse = sl_fv_smallest(p, n_cells);
    const SlMeshSolution fine = sl_fv_smallest(p, 2 * n_cells);
    const double extrap = fine.lambda + (fine.lambda - coarse.lambda) / 3.0;
    const double est = std::abs(fine.lambda - coarse.lambda) / 3.0;
    if (!std::isfinite(extrap) || est > 0.05 * std::max(1.0, std::abs(extrap)))
        throw SolverFailure("sl_solve: no convergence under refinement (lambda_N=" +
                            std::to_string(coarse.lambda) +
                            ", lambda_2N=" + std::to_string(fine.lambda) +
                            ", mesh=" + std::to_string(n_cells) + ")");
    SlResult out;
    out.lambda = extrap;
    out.est_error = est;
    out.mesh_size = 2 * n_cells;
    out.centers = fine.centers;
    out.values = fine.values;
    return out;
}

double OdeSolution::value(double phi) const {
    const double s = (phi - a) / h;
    const auto n = static_cast<long long>(f.size());
    long long i = static_cast<long long>(std::floor(s));
    i = std::max(0LL, std::min(i, n - 2));
    const double u = s - i;
    const double f0 = f[i], f1 = f[i + 1], d0 = fp[i] * h, d1 = fp[i + 1] * h;
    const double u2 = u * u, u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * f0 + (u3 - 2 * u2 + u) * d0 +
           (-2 * u3 + 3 * u2) * f1 + (u3 - u2) * d1;
}

double OdeSolution::deriv(double phi) const {
    const double s = (phi - a) / h;
    const auto n = static_cast<long long>(f.size());
    long long i = static_cast<long long>(std::floor(s));
    i = std::max(0LL, std::min(i, n - 2));
    const double u = s - i;
    const double f0 = f[i], f1 = f[i + 1], d0 = fp[i] * h, d1 = fp[i + 1] * h;
    const double du = (6 * u * u - 6 * u) * f0 + (3 * u * u - 4 * u + 1) * d0 +
                      (-6 * u * u + 6 * u) * f1 + (3 * u * u - 2 * u) * d1;
    return du / h;
}

OdeSolution integrate_cot_ode(double c, double mu, double a, double b, int steps,
                              bool regular_start, double fa, double fpa) {
    if (steps < 8) throw std::invalid_argument("integrate_cot_ode: too few steps");
    OdeSolution sol;
    sol.a = a;
    sol.h = (b - a) / steps;
    sol.f.assign(steps + 1, 0.0);
    sol.fp.assign(steps + 1, 0.0);

    const auto rhs = [&](double phi, double f, double g) {
        return -c * (std::cos(phi) / std::sin(phi)) * g - mu * f;
    };

    int start = 0;
    if (regular_start) {
        // Series about the singular endpoint: f = 1 + a2 phi^2 + a4 phi^4.
        const double a2 = -mu / (2.0 * (c + 1.0));
        const double a4 = -mu * a2 / (4.0 * (c + 3.0));
        sol.f[0] = 1.0;
        sol.fp[0] = 0.0;
        const double ph = sol.h;
        sol.f[1] = 1.0 + a2 * ph * ph + a4 * ph * ph * ph * ph;
        sol.fp[1] = 2.0 * a2 * ph + 4.0 * a4 * ph * ph * ph;
        start = 1;
    } else {
        sol.f[0] = fa;
        sol.fp[0] = fpa;
    }

    for (int k = start; k < steps; ++k) {
        const double phi = a + k * sol.h;
        const double f = sol.f[k], g = sol.fp[k], h = sol.h;
        const double k1f = g, k1g = rhs(phi, f, g);
        const double k2f = g + 0.5 * h * k1g, k2g = rhs(phi + 0.5 * h, f + 0.5 * h * k1f, g + 0.5 * h * k1g);
        const double k3f = g + 0.5 * h * k2g, k3g = rhs(phi + 0.5 * h, f + 0.5 * h * k2f, g + 0.5 * h * k2g);
        const double k4f = g + h * k3g, k4g = rhs(phi + h, f + h * k3f, g + h * k3g);
        sol.f[k + 1] = f + h / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
        sol.fp[k + 1] = g + h / 6.0 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g);
    }
    return sol;
}

double shoot_smallest_mu(double c, double a, double b, bool regular_left, int steps) {
    const auto end_value = [&](double mu) {
        const OdeSolution s = regular_left ? integrate_cot_ode(c, mu, a, b, steps, true)
                                           : integrate_cot_ode(c, mu, a, b, steps, false, 0.0, 1.0);
        return s.f.back();
    };

    double mu_lo = 1e-8;
    double g_lo = end_value(mu_lo);
    const double step = std::max(1.0, 0.25 * std::pow(std::numbers::pi / (b - a), 2.0));
    double mu_hi = mu_lo;
    double g_hi = g_lo;
    bool bracketed = false;
    for (int k = 0; k < 400; ++k) {
        mu_hi = mu_lo + step;
        g_hi = end_value(mu_hi);
        if (g_lo > 0.0 && g_hi <= 0.0) {
            bracketed = true;
            break;
        }
        mu_lo = mu_hi;
        g_lo = g_hi;
    }
    if (!bracketed) throw SolverFailure("shoot_smallest_mu: failed to bracket the first eigenvalue");
    for (int it = 0; it < 200 && mu_hi - mu_lo > 1e-14 * std::max(1.0, mu_hi); ++it) {
        const double mid = 0.5 * (mu_lo + mu_hi);
        if (end_value(mid) > 0.0)
            mu_lo = mid;
        else
            mu_hi = mid;
    }
    return 0.5 * (mu_lo + mu_hi);
}

} // namespace acfh
