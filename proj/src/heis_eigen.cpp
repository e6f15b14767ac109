#include "acfh/heis_eigen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "acfh/errors.hpp"
#include "acfh/quadrature.hpp"
#include "acfh/sturm_liouville.hpp"

namespace acfh {

namespace {
constexpr double pi = std::numbers::pi;

bool at_sin_zero(double phi) { return phi == 0.0 || phi == pi || std::abs(std::sin(phi)) < 1e-14; }
} // namespace

PhiInterval phi_interval(double phi0, double phi1) {
    return phi_interval(phi0, phi1,
                        at_sin_zero(phi0) ? EndpointKind::singular_regular : EndpointKind::dirichlet,
                        at_sin_zero(phi1) ? EndpointKind::singular_regular : EndpointKind::dirichlet);
}

PhiInterval phi_interval(double phi0, double phi1, EndpointKind left, EndpointKind right) {
    if (!(0.0 <= phi0 && phi0 < phi1 && phi1 <= pi))
        throw std::invalid_argument("phi_interval: need 0 <= phi0 < phi1 <= pi");
    if (left == EndpointKind::singular_regular && !at_sin_zero(phi0))
        throw std::invalid_argument("phi_interval: singular-regular endpoint must sit at 0 or pi");
    if (right == EndpointKind::singular_regular && !at_sin_zero(phi1))
        throw std::invalid_argument("phi_interval: singular-regular endpoint must sit at 0 or pi");
    return PhiInterval{phi0, phi1, left, right};
}

EigenSolution sl_eigen(const PhiInterval& interval, int mesh) {
    if (mesh < 16) throw std::invalid_argument("sl_eigen: mesh must be >= 16");
    SlProblem p;
    p.a = interval.phi0;
    p.b = interval.phi1;
    p.weight = [](double phi) { return std::sin(phi); };
    p.scale = 4.0;
    p.dirichlet_left = interval.left == EndpointKind::dirichlet;
    p.dirichlet_right = interval.right == EndpointKind::dirichlet;

    const SlResult r = sl_solve(p, mesh);
    EigenSolution out;
    out.lambda = r.lambda;
    out.alpha = alpha_h1(r.lambda);
    out.phi = r.centers;
    out.eigenfunction = r.values;
    out.mesh_size = r.mesh_size;
    out.est_error = r.est_error;
    return out;
}

double alpha_h1(double lambda) {
    if (lambda < 0.0) throw std::invalid_argument("alpha_h1: lambda must be >= 0");
    return 2.0 * lambda / (2.0 + std::sqrt(4.0 + 4.0 * lambda));
}

BridgeResult euclid_bridge(double phi0, int mesh) {
    if (!(phi0 > 0.0 && phi0 < pi))
        throw std::invalid_argument("euclid_bridge: phi0 must lie in (0, pi)");
    BridgeResult out;
    out.heis = sl_eigen(phi_interval(0.0, phi0), mesh);
    out.euclid = cap_eigenvalue(EuclidCap{phi0, 3}, mesh);
    out.lambda_h = out.heis.lambda;
    out.lambda_e = out.euclid.lambda;
    const double tol = 10.0 * (out.heis.est_error + 4.0 * out.euclid.est_error) +
                       1e-9 * std::max(1.0, out.lambda_h);
    if (std::abs(out.lambda_h - 4.0 * out.lambda_e) > tol)
        throw SolverFailure("euclid_bridge: lambda_h and 4 lambda_e disagree beyond solver tolerance");
    return out;
}

double rayleigh_phi(const HField& u, const PhiInterval& support, const SphereGridSpec& grid) {
    const ProductGrid band =
        koranyi_sphere_grid(grid.n_phi, grid.n_theta, support.phi0, support.phi1);
    const double num = integrate(band, [&](double phi, double theta) {
        const HPoint p = from_polar(1.0, phi, theta);
        const double ang = gradient_split(u, p).angular_sq;
        return ang / std::sqrt(p.x[0] * p.x[0] + p.y[0] * p.y[0]);
    });
    const double den = integrate(band, [&](double phi, double theta) {
        const HPoint p = from_polar(1.0, phi, theta);
        const double v = u.value(p);
        return v * v * std::sqrt(p.x[0] * p.x[0] + p.y[0] * p.y[0]);
    });
    if (!(den > 0.0) || !std::isfinite(den))
        throw DegenerateField("rayleigh_phi: vanishing denominator");
    return num / den;
}

double rayleigh_2d(const std::function<AngularJet(double, double)>& f,
                   const ThetaPhiRect& domain, const SphereGridSpec& grid) {
    if (!(domain.theta0 < domain.theta1 && domain.phi0 < domain.phi1))
        throw std::invalid_argument("rayleigh_2d: empty domain");
    if (!(domain.phi0 > 0.0 && domain.phi1 < pi))
        throw std::invalid_argument("rayleigh_2d: domain must avoid sin(phi) = 0");

    const ProductGrid rect = make_product_grid(
        {gauss_legendre(grid.n_theta, domain.theta0, domain.theta1),
         gauss_legendre(grid.n_phi, domain.phi0, domain.phi1)},
        nullptr);
    const double num = integrate(rect, [&](double theta, double phi) {
        const AngularJet j = f(theta, phi);
        const double s = std::sin(phi);
        return j.ft * j.ft / s + 4.0 * s * j.ft * j.fp + 4.0 * s * j.fp * j.fp;
    });
    const double den = integrate(rect, [&](double theta, double phi) {
        const AngularJet j = f(theta, phi);
        return std::sin(phi) * j.f * j.f;
    });
    if (!(den > 0.0) || !std::isfinite(den))
        throw DegenerateField("rayleigh_2d: vanishing denominator");
    return num / den;
}

std::array<std::array<double, 2>, 2> divergence_matrix(double theta, double phi, double alpha) {
    (void)theta;
    const double s = std::sin(phi);
    if (!(s > 0.0)) throw CharacteristicAxis("divergence_matrix: sin(phi) must be > 0");
    return {{{1.0 / s, (4.0 + 2.0 * alpha) * s}, {-2.0 * alpha * s, 4.0 * s}}};
}

} // namespace acfh
