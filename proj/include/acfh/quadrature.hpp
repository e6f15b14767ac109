#pragma once

#include <cstddef>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

#include "acfh/sum.hpp"

namespace acfh {

inline constexpr double kPi = std::numbers::pi;

/// Gauss-Legendre rule with `order` nodes on (a, b); exact for polynomials
/// of degree <= 2*order - 1. Nodes are strictly interior.
struct QuadratureRule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
    int order = 0;
    double a = 0.0;
    double b = 0.0;
};

QuadratureRule1D gauss_legendre(int order, double a, double b);

/// Tensor grid of 2 or 3 one-dimensional rules with a pointwise measure
/// density (rho^3, sin(phi), sqrt(sin(phi)), ...). Combined weights are
/// flattened at construction in a fixed axis-major order.
struct ProductGrid {
    std::vector<QuadratureRule1D> axes;
    std::function<double(double, double, double)> weight_fn;
    std::vector<double> weights; // density folded in, length = product of axis sizes

    std::size_t size() const { return weights.size(); }
};

ProductGrid make_product_grid(std::vector<QuadratureRule1D> axes,
                              std::function<double(double, double, double)> density);

// --- Koranyi-geometry grids (H^1 polar coordinates) --------------------------
// Coordinates: x = rho*sqrt(sin phi)*cos theta, y = rho*sqrt(sin phi)*sin theta,
// t = rho^2 cos phi. Volume element rho^3 drho dphi dtheta; the perimeter
// measure of the unit gauge sphere is sqrt(sin phi) dtheta dphi.

/// Ball B_r, axes (rho, phi, theta), density rho^3.
ProductGrid koranyi_ball_grid(double r, int n_rho, int n_phi, int n_theta);

/// Ball B_r with the kernel |zeta|^{-2} folded into the density (rho^3 * rho^{-2} = rho).
ProductGrid koranyi_kernel_grid(double r, int n_rho, int n_phi, int n_theta);

/// Shell B_r1 \ B_r0, density rho^3.
ProductGrid koranyi_shell_grid(double r0, double r1, int n_rho, int n_phi, int n_theta);

/// Gauge sphere band phi in (phi0, phi1), axes (phi, theta), density sqrt(sin phi).
ProductGrid koranyi_sphere_grid(int n_phi, int n_theta, double phi0 = 0.0, double phi1 = kPi);

// --- Euclidean grids (n = 3 spherical coordinates, polar axis x3) ------------

/// Ball B_r with the kernel |x|^{2-n} folded in; only n = 3 is supported,
/// where the density is rho * sin(phi).
ProductGrid euclid_ball_grid(double r, int n, int n_rho, int n_phi, int n_theta);

/// Unit sphere S^2, axes (phi, theta), density sin(phi).
ProductGrid euclid_sphere_grid(int n_phi, int n_theta);

namespace detail {

inline void grid_index(const ProductGrid& g, std::size_t k, double c[3]) {
    if (g.axes.size() == 2) {
        const std::size_t n1 = g.axes[1].nodes.size();
        c[0] = g.axes[0].nodes[k / n1];
        c[1] = g.axes[1].nodes[k % n1];
        c[2] = 0.0;
    } else {
        const std::size_t n1 = g.axes[1].nodes.size();
        const std::size_t n2 = g.axes[2].nodes.size();
        c[2] = g.axes[2].nodes[k % n2];
        const std::size_t k1 = k / n2;
        c[1] = g.axes[1].nodes[k1 % n1];
        c[0] = g.axes[0].nodes[k1 / n1];
    }
}

template <class F>
double call_integrand(F&& f, const double c[3], std::size_t n_axes) {
    if constexpr (std::is_invocable_v<F, double, double, double>) {
        (void)n_axes;
        return f(c[0], c[1], c[2]);
    } else {
        (void)n_axes;
        return f(c[0], c[1]);
    }
}

} // namespace detail

/// Serial reference evaluation; the parallel kernel must match it bitwise.
template <class F>
double integrate_serial(const ProductGrid& g, F&& f) {
    std::vector<double> vals(g.size());
    const std::size_t n = g.size();
    for (std::size_t k = 0; k < n; ++k) {
        double c[3];
        detail::grid_index(g, k, c);
        vals[k] = g.weights[k] * detail::call_integrand(f, c, g.axes.size());
    }
    return pairwise_sum(vals);
}

/// OpenMP-parallel evaluation. Every slot of the value buffer is written
/// independently and the reduction is the fixed pairwise tree, so the result
/// does not depend on the number of workers.
template <class F>
double integrate(const ProductGrid& g, F&& f) {
    std::vector<double> vals(g.size());
    const long long n = static_cast<long long>(g.size());
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < n; ++k) {
        double c[3];
        detail::grid_index(g, static_cast<std::size_t>(k), c);
        vals[static_cast<std::size_t>(k)] =
            g.weights[static_cast<std::size_t>(k)] * detail::call_integrand(f, c, g.axes.size());
    }
    return pairwise_sum(vals);
}

} // namespace acfh
