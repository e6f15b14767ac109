#include "acfh/heis_polar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace acfh {

namespace detail {

bool on_characteristic_axis(const HPoint& p) {
    const double s2 = p.x[0] * p.x[0] + p.y[0] * p.y[0];
    const double rho = gauge_norm(p);
    return s2 <= 1e-18 * rho * rho;
}

PolarGradients polar_gradients_unchecked(const HPoint& p) {
    const double x = p.x[0], y = p.y[0], t = p.t;
    const double s2 = x * x + y * y;
    const double rho = gauge_norm(p);
    const double r3 = rho * rho * rho;
    const double r4 = r3 * rho;

    PolarGradients g;
    g.grad_rho = {(s2 * x + t * y) / r3, (s2 * y - t * x) / r3};
    // 2/(rho (x^2+y^2)) * (t grad rho + rho (-y, x)) with the cancellation
    // t^2 - rho^4 = -(x^2+y^2)^2 carried out, which is regular on the axis.
    g.grad_phi = {2.0 * (t * x - s2 * y) / r4, 2.0 * (t * y + s2 * x) / r4};
    g.grad_theta = {s2 > 0.0 ? -y / s2 : 0.0, s2 > 0.0 ? x / s2 : 0.0};
    return g;
}

} // namespace detail

PolarCoord to_polar(const HPoint& p) {
    if (p.n() != 1) throw std::invalid_argument("to_polar: only H^1 supported");
    const double rho = gauge_norm(p);
    if (rho == 0.0) throw PoleError("to_polar: pole at the origin");
    PolarCoord c;
    c.rho = rho;
    c.phi = std::acos(std::clamp(p.t / (rho * rho), -1.0, 1.0));
    if (detail::on_characteristic_axis(p)) {
        c.theta = 0.0;
        c.degenerate_axis = true;
    } else {
        const double th = std::atan2(p.y[0], p.x[0]);
        c.theta = th < 0.0 ? th + 2.0 * std::numbers::pi : th;
    }
    return c;
}

HPoint from_polar(const PolarCoord& c) { return from_polar(c.rho, c.phi, c.theta); }

HPoint from_polar(double rho, double phi, double theta) {
    if (!(rho > 0.0)) throw std::invalid_argument("from_polar: rho must be > 0");
    if (!(phi >= 0.0 && phi <= std::numbers::pi))
        throw std::invalid_argument("from_polar: phi must lie in [0, pi]");
    const double w = rho * std::sqrt(std::max(std::sin(phi), 0.0));
    return h1(w * std::cos(theta), w * std::sin(theta), rho * rho * std::cos(phi));
}

PolarGradients polar_gradients(const HPoint& p) {
    if (p.n() != 1) throw std::invalid_argument("polar_gradients: only H^1 supported");
    if (detail::on_characteristic_axis(p))
        throw CharacteristicAxis("polar_gradients: point on the center axis");
    return detail::polar_gradients_unchecked(p);
}

HorizontalFrame horizontal_frame(const HPoint& p) {
    const PolarGradients g = polar_gradients(p);
    const double nr = std::hypot(g.grad_rho[0], g.grad_rho[1]);
    const double np = std::hypot(g.grad_phi[0], g.grad_phi[1]);
    return HorizontalFrame{{g.grad_rho[0] / nr, g.grad_rho[1] / nr},
                           {g.grad_phi[0] / np, g.grad_phi[1] / np}};
}

GradientSplit gradient_split(const HField& u, const HPoint& p) {
    const HorizontalFrame fr = horizontal_frame(p);
    const std::vector<double> g = horizontal_gradient(u, p);
    const double gr = g[0] * fr.e_rho[0] + g[1] * fr.e_rho[1];
    const double gp = g[0] * fr.e_phi[0] + g[1] * fr.e_phi[1];
    return GradientSplit{gr * gr, gp * gp};
}

double sublaplacian_polar(double alpha, const std::function<AngularJet(double, double)>& f,
                          const PolarCoord& c) {
    const double s = std::sin(c.phi);
    if (!(s > 0.0)) throw CharacteristicAxis("sublaplacian_polar: sin(phi) must be > 0");
    const double co = std::cos(c.phi);
    const AngularJet j = f(c.theta, c.phi);
    const double bracket = alpha * (alpha + 2.0) * s * j.f - 2.0 * alpha * co * j.ft +
                           j.ftt / s + 4.0 * s * j.ftp + 4.0 * s * j.fpp + 4.0 * co * j.fp;
    return std::pow(c.rho, alpha - 2.0) * bracket;
}

double sublaplacian_polar(double alpha, const std::function<PhiJet(double)>& f,
                          const PolarCoord& c) {
    const double s = std::sin(c.phi);
    if (!(s > 0.0)) throw CharacteristicAxis("sublaplacian_polar: sin(phi) must be > 0");
    const double co = std::cos(c.phi);
    const PhiJet j = f(c.phi);
    const double bracket =
        alpha * (alpha + 2.0) * s * j.f + 4.0 * (co * j.fp + s * j.fpp);
    return std::pow(c.rho, alpha - 2.0) * bracket;
}

PolarLaplacians polar_laplacians(const HPoint& p) {
    if (p.n() != 1) throw std::invalid_argument("polar_laplacians: only H^1 supported");
    if (detail::on_characteristic_axis(p))
        throw CharacteristicAxis("polar_laplacians: point on the center axis");

    const double x = p.x[0], y = p.y[0], t = p.t;
    const double s2 = x * x + y * y;
    const GaugeDerivatives gd = gauge_derivatives(p);
    const double rho = gauge_norm(p);

    PolarLaplacians out;
    out.lap_rho = gd.lap;

    // Delta theta = X(-y/(x^2+y^2)) + Y(x/(x^2+y^2)); the t-derivatives vanish.
    const double s4 = s2 * s2;
    out.lap_theta = (2.0 * x * y / s4) + (-2.0 * x * y / s4);

    // phi = arccos(g), g = t rho^{-2}. Chain rule through the gauge jets:
    //   Delta(rho^{-2}) = 6 rho^{-4} |grad rho|^2 - 2 rho^{-3} Delta rho
    //   Delta g  = t Delta(rho^{-2}) + 2 <grad t, grad(rho^{-2})>
    //   Delta phi = -Delta g / sqrt(1-g^2) - g |grad g|^2 / (1-g^2)^{3/2}.
    const double g = t / (rho * rho);
    const double inv2 = std::pow(rho, -2.0);
    const double lap_inv2 = 6.0 * std::pow(rho, -4.0) * gd.grad_sq - 2.0 * std::pow(rho, -3.0) * gd.lap;
    const double gtx = 2.0 * y;  // X t
    const double gty = -2.0 * x; // Y t
    const double gix = -2.0 * std::pow(rho, -3.0) * gd.dX[0]; // X rho^{-2}
    const double giy = -2.0 * std::pow(rho, -3.0) * gd.dY[0];
    const double lap_g = t * lap_inv2 + 2.0 * (gtx * gix + gty * giy);
    const double ggx = inv2 * gtx + t * gix;
    const double ggy = inv2 * gty + t * giy;
    const double grad_g_sq = ggx * ggx + ggy * ggy;
    // 1 - g^2 = (x^2+y^2)^2 / rho^4 by the definition of the gauge; the
    // direct form avoids the cancellation of 1 - (t/rho^2)^2 near the axis.
    const double sin_phi = s2 / (rho * rho);
    const double one_m = sin_phi * sin_phi;
    out.lap_phi = -lap_g / std::sqrt(one_m) - g * grad_g_sq / std::pow(one_m, 1.5);
    return out;
}

} // namespace acfh
