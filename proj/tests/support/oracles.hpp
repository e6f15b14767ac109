#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include <cmath>
#include <functional>

#include "acfh/quadrature.hpp"

namespace oracles {

/// High-order 1D Gauss-Legendre reference quadrature.
inline double gl_1d(int order, double a, double b, const std::function<double(double)>& f) {
    const acfh::QuadratureRule1D q = acfh::gauss_legendre(order, a, b);
    double s = 0.0;
    for (int i = 0; i < q.order; ++i) s += q.weights[i] * f(q.nodes[i]);
    return s;
}

/// int_0^pi sqrt(sin) dphi = sqrt(pi) Gamma(3/4) / Gamma(5/4).
inline double sqrt_sin_integral() {
    return std::sqrt(acfh::kPi) * std::tgamma(0.75) / std::tgamma(1.25);
}

// Values frozen from the shooting oracle (40000 RK4 steps, bisection to 1e-14).
namespace frozen {
inline constexpr double lambda_e_cap_pi3_n3 = 4.936041865403522;
inline constexpr double lambda_sl_quarter_band = 13.906932783554819; // (pi/4, 3pi/4)
inline constexpr double lambda_sl_cap_pi3 = 19.744167461614087;      // (0, pi/3)
inline constexpr double alpha_e_pi3 = 1.777288270158945;
inline constexpr double alpha_e_2pi3 = 0.601509309391251;
inline constexpr double alpha_h1_cap_pi3 = 3.554576540317890;
inline constexpr double psi_01_plus_04 = 3.158145365937077;
} // namespace frozen

} // namespace oracles
