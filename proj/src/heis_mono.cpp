#include "acfh/heis_mono.hpp"

#include <cmath>
#include <stdexcept>

#include "acfh/errors.hpp"
#include "acfh/heis_eigen.hpp"
#include "acfh/heis_polar.hpp"
#include "acfh/quadrature.hpp"

namespace acfh {

namespace {

double grad_sq_on_support(const HField& u, const HPoint& p) {
    if (!(u.value(p) > 0.0)) return 0.0;
    return horizontal_gradient_sq(u, p);
}

// int_{B_r} |grad u|^2 / |zeta|^2 dzeta over {u > 0}; kernel folded in the grid.
double kernel_energy(const HField& u, double r, const HGridSpec& grid) {
    const ProductGrid ball = koranyi_kernel_grid(r, grid.n_rho, grid.n_phi, grid.n_theta);
    return integrate(ball, [&](double rho, double phi, double theta) {
        return grad_sq_on_support(u, from_polar(rho, phi, theta));
    });
}

} // namespace

double j_beta(const HTwoPhasePair& pair, double r, double beta, const HGridSpec& grid) {
    if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("j_beta: r must lie in (0, 1]");
    if (!(beta > 0.0)) throw std::invalid_argument("j_beta: beta must be > 0");
    const double f1 = kernel_energy(pair.plus, r, grid);
    const double f2 = kernel_energy(pair.minus, r, grid);
    return std::pow(r, -beta) * f1 * f2;
}

double boundary_quotient(const HField& u, const HGridSpec& grid) {
    const ProductGrid sphere = koranyi_sphere_grid(grid.n_phi, grid.n_theta);
    const double num = integrate(sphere, [&](double phi, double theta) {
        const HPoint p = from_polar(1.0, phi, theta);
        const double g2 = grad_sq_on_support(u, p);
        return g2 == 0.0 ? 0.0 : g2 / std::sqrt(p.x[0] * p.x[0] + p.y[0] * p.y[0]);
    });
    const double den = kernel_energy(u, 1.0, grid);
    if (!(den > 0.0) || !std::isfinite(den))
        throw DegenerateField("boundary_quotient: vanishing kernel energy");
    return num / den;
}

double j_log_derivative(const HTwoPhasePair& pair, double beta, const HGridSpec& grid) {
    return boundary_quotient(pair.plus, grid) + boundary_quotient(pair.minus, grid) - beta;
}

LowerBoundReport lower_bound_check(const HTwoPhasePair& pair,
                                   const std::array<double, 2>& lambda_estimates,
                                   const HGridSpec& grid, double tolerance) {
    LowerBoundReport rep;
    rep.tolerance = tolerance;
    try {
        rep.left_plus = boundary_quotient(pair.plus, grid);
    } catch (const DegenerateField&) {
        rep.degenerate_plus = true;
    }
    try {
        rep.left_minus = boundary_quotient(pair.minus, grid);
    } catch (const DegenerateField&) {
        rep.degenerate_minus = true;
    }
    rep.alpha_plus = alpha_h1(lambda_estimates[0]);
    rep.alpha_minus = alpha_h1(lambda_estimates[1]);
    rep.right = 2.0 * (rep.alpha_plus + rep.alpha_minus);
    if (rep.degenerate_plus || rep.degenerate_minus) {
        rep.has_verdict = false;
        return rep;
    }
    rep.left = rep.left_plus + rep.left_minus;
    rep.has_verdict = true;
    rep.pass = rep.left >= rep.right - tolerance;
    return rep;
}

GradientBoundReport gradient_bound_diagnostic(const HField& u, std::span<const double> rho_values,
                                              const HGridSpec& grid) {
    GradientBoundReport rep;
    for (const double rho : rho_values) {
        if (!(rho > 0.0 && rho <= 0.5))
            throw std::invalid_argument("gradient_bound_diagnostic: rho must lie in (0, 1/2]");
        GradientBoundRow row;
        row.rho = rho;
        row.energy = kernel_energy(u, rho, grid);
        const ProductGrid shell =
            koranyi_shell_grid(rho, 2.0 * rho, grid.n_rho, grid.n_phi, grid.n_theta);
        const double mass = integrate(shell, [&](double r, double phi, double theta) {
            const double v = u.value(from_polar(r, phi, theta));
            return v * v;
        });
        if (!(mass > 0.0))
            throw DegenerateField("gradient_bound_diagnostic: vanishing annulus mass");
        row.scaled_mass = mass / (rho * rho * rho * rho);
        row.ratio = row.energy / row.scaled_mass;
        rep.sup_ratio = std::max(rep.sup_ratio, row.ratio);
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace acfh
