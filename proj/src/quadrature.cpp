#include "acfh/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace acfh {

QuadratureRule1D gauss_legendre(int order, double a, double b) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    if (!(a < b)) throw std::invalid_argument("gauss_legendre: need a < b");

    const int n = order;
    QuadratureRule1D rule;
    rule.order = order;
    rule.a = a;
    rule.b = b;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);

    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    // Newton iteration on P_n over the symmetric half; the other half by symmetry.
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            if (n == 1) p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            const double pn = (n == 1) ? x : p1;
            const double pn1 = (n == 1) ? 1.0 : p0;
            pp = n * (x * pn - pn1) / (x * x - 1.0);
            const double dx = pn / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.nodes[i] = mid - half * x;
        rule.nodes[n - 1 - i] = mid + half * x;
        rule.weights[i] = half * w;
        rule.weights[n - 1 - i] = half * w;
    }
    return rule;
}

ProductGrid make_product_grid(std::vector<QuadratureRule1D> axes,
                              std::function<double(double, double, double)> density) {
    if (axes.size() != 2 && axes.size() != 3)
        throw std::invalid_argument("make_product_grid: need 2 or 3 axes");

    ProductGrid g;
    g.axes = std::move(axes);
    g.weight_fn = std::move(density);

    std::size_t total = 1;
    for (const auto& ax : g.axes) total *= ax.nodes.size();
    g.weights.assign(total, 0.0);

    for (std::size_t k = 0; k < total; ++k) {
        double c[3];
        detail::grid_index(g, k, c);
        double w;
        if (g.axes.size() == 2) {
            const std::size_t n1 = g.axes[1].nodes.size();
            w = g.axes[0].weights[k / n1] * g.axes[1].weights[k % n1];
        } else {
            const std::size_t n1 = g.axes[1].nodes.size();
            const std::size_t n2 = g.axes[2].nodes.size();
            const std::size_t k1 = k / n2;
            w = g.axes[0].weights[k1 / n1] * g.axes[1].weights[k1 % n1] *
                g.axes[2].weights[k % n2];
        }
        const double d = g.weight_fn ? g.weight_fn(c[0], c[1], c[2]) : 1.0;
        const double cw = w * d;
        if (!(cw >= 0.0))
            throw std::invalid_argument("make_product_grid: negative combined weight");
        g.weights[k] = cw;
    }
    return g;
}

namespace {

// Rotating the theta interval by half a mean cell keeps nodes off
// axis-aligned zero sets of positive-part test fields; the integral over a
// full period is unchanged.
QuadratureRule1D theta_rule(int n_theta) {
    const double off = 0.5 * kPi / n_theta;
    return gauss_legendre(n_theta, off, 2.0 * kPi + off);
}

void check_counts(int n0, int n1, int n2) {
    if (n0 < 1 || n1 < 1 || n2 < 1)
        throw std::invalid_argument("grid: node counts must be >= 1");
}

} // namespace

ProductGrid koranyi_ball_grid(double r, int n_rho, int n_phi, int n_theta) {
    if (!(r > 0.0)) throw std::invalid_argument("koranyi_ball_grid: r must be > 0");
    check_counts(n_rho, n_phi, n_theta);
    return make_product_grid(
        {gauss_legendre(n_rho, 0.0, r), gauss_legendre(n_phi, 0.0, kPi), theta_rule(n_theta)},
        [](double rho, double, double) { return rho * rho * rho; });
}

ProductGrid koranyi_kernel_grid(double r, int n_rho, int n_phi, int n_theta) {
    if (!(r > 0.0)) throw std::invalid_argument("koranyi_kernel_grid: r must be > 0");
    check_counts(n_rho, n_phi, n_theta);
    return make_product_grid(
        {gauss_legendre(n_rho, 0.0, r), gauss_legendre(n_phi, 0.0, kPi), theta_rule(n_theta)},
        [](double rho, double, double) { return rho; });
}

ProductGrid koranyi_shell_grid(double r0, double r1, int n_rho, int n_phi, int n_theta) {
    if (!(0.0 <= r0 && r0 < r1)) throw std::invalid_argument("koranyi_shell_grid: need 0 <= r0 < r1");
    check_counts(n_rho, n_phi, n_theta);
    return make_product_grid(
        {gauss_legendre(n_rho, r0, r1), gauss_legendre(n_phi, 0.0, kPi), theta_rule(n_theta)},
        [](double rho, double, double) { return rho * rho * rho; });
}

ProductGrid koranyi_sphere_grid(int n_phi, int n_theta, double phi0, double phi1) {
    check_counts(n_phi, n_theta, 1);
    if (!(0.0 <= phi0 && phi0 < phi1 && phi1 <= kPi))
        throw std::invalid_argument("koranyi_sphere_grid: need 0 <= phi0 < phi1 <= pi");
    return make_product_grid(
        {gauss_legendre(n_phi, phi0, phi1), theta_rule(n_theta)},
        [](double phi, double, double) { return std::sqrt(std::max(std::sin(phi), 0.0)); });
}

ProductGrid euclid_ball_grid(double r, int n, int n_rho, int n_phi, int n_theta) {
    if (!(r > 0.0)) throw std::invalid_argument("euclid_ball_grid: r must be > 0");
    if (n != 3) throw std::invalid_argument("euclid_ball_grid: unsupported dimension (only n = 3)");
    check_counts(n_rho, n_phi, n_theta);
    // |x|^{2-n} * rho^{n-1} = rho for n = 3.
    return make_product_grid(
        {gauss_legendre(n_rho, 0.0, r), gauss_legendre(n_phi, 0.0, kPi), theta_rule(n_theta)},
        [](double rho, double phi, double) { return rho * std::sin(phi); });
}

ProductGrid euclid_sphere_grid(int n_phi, int n_theta) {
    check_counts(n_phi, n_theta, 1);
    return make_product_grid(
        {gauss_legendre(n_phi, 0.0, kPi), theta_rule(n_theta)},
        [](double phi, double, double) { return std::sin(phi); });
}

} // namespace acfh
