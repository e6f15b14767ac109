#include "acfh/euclid_acf.hpp"

#include <cmath>
#include <stdexcept>

#include "acfh/errors.hpp"
#include "acfh/quadrature.hpp"

namespace acfh {

namespace {

Vec3 spherical_point(double rho, double phi, double theta) {
    const double s = std::sin(phi);
    return Vec3{rho * s * std::cos(theta), rho * s * std::sin(theta), rho * std::cos(phi)};
}

double grad_sq_gated(const EuclidField& u, const Vec3& x) {
    if (u.support && !u.support(x)) return 0.0;
    const Vec3 g = euclid_gradient(u, x);
    return g[0] * g[0] + g[1] * g[1] + g[2] * g[2];
}

// int_{B_r} |grad u|^2 / |x| dx over the support, kernel folded in the grid.
double energy(const EuclidField& u, double r, const EGridSpec& grid) {
    const ProductGrid ball = euclid_ball_grid(r, 3, grid.n_rho, grid.n_phi, grid.n_theta);
    return integrate(ball, [&](double rho, double phi, double theta) {
        return grad_sq_gated(u, spherical_point(rho, phi, theta));
    });
}

} // namespace

Vec3 euclid_gradient(const EuclidField& u, const Vec3& x) {
    if (u.gradient) return u.gradient(x);
    const double h = u.fd_step;
    Vec3 g{};
    for (int i = 0; i < 3; ++i) {
        Vec3 xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        g[i] = (u.value(xp) - u.value(xm)) / (2.0 * h);
    }
    return g;
}

double phi_functional(const TwoPhasePair& pair, double r, const EGridSpec& grid) {
    if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("phi_functional: r must lie in (0, 1]");
    const double i1 = energy(pair.plus, r, grid);
    const double i2 = energy(pair.minus, r, grid);
    return i1 * i2 / (r * r * r * r);
}

EuclidField rescale(const EuclidField& u, double r) {
    if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("rescale: r must lie in (0, 1]");
    EuclidField out;
    out.fd_step = u.fd_step;
    out.value = [u, r](const Vec3& x) { return u.value({r * x[0], r * x[1], r * x[2]}) / r; };
    if (u.gradient)
        out.gradient = [u, r](const Vec3& x) { return u.gradient({r * x[0], r * x[1], r * x[2]}); };
    if (u.support)
        out.support = [u, r](const Vec3& x) { return u.support({r * x[0], r * x[1], r * x[2]}); };
    return out;
}

double j_ratio(const EuclidField& u, const EGridSpec& grid) {
    const ProductGrid sphere = euclid_sphere_grid(grid.n_phi, grid.n_theta);
    const double num = integrate(sphere, [&](double phi, double theta) {
        return grad_sq_gated(u, spherical_point(1.0, phi, theta));
    });
    const double den = energy(u, 1.0, grid);
    if (!(den > 0.0) || !std::isfinite(den))
        throw DegenerateField("j_ratio: vanishing weighted Dirichlet energy");
    return num / den;
}

double phi_log_derivative(const TwoPhasePair& pair, const EGridSpec& grid) {
    return -4.0 + j_ratio(pair.plus, grid) + j_ratio(pair.minus, grid);
}

} // namespace acfh
