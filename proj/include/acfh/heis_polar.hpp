#pragma once

#include <array>
#include <functional>

#include "acfh/heisenberg.hpp"

namespace acfh {

/// Koranyi polar coordinates on H^1: x = rho*sqrt(sin phi)*cos theta,
/// y = rho*sqrt(sin phi)*sin theta, t = rho^2*cos phi.
struct PolarCoord {
    double rho = 0.0;
    double phi = 0.0;
    double theta = 0.0;
    bool degenerate_axis = false; // theta undefined on the center axis x = y = 0
};

PolarCoord to_polar(const HPoint& p);
HPoint from_polar(const PolarCoord& c);
HPoint from_polar(double rho, double phi, double theta);

/// Horizontal gradients of the three coordinates as coefficients on (X, Y).
struct PolarGradients {
    std::array<double, 2> grad_rho;
    std::array<double, 2> grad_phi;
    std::array<double, 2> grad_theta;
};

PolarGradients polar_gradients(const HPoint& p);

/// Orthonormal horizontal frame e_rho = grad rho / |grad rho|,
/// e_phi = grad phi / |grad phi|; spans the horizontal plane off the axis.
struct HorizontalFrame {
    std::array<double, 2> e_rho;
    std::array<double, 2> e_phi;
};

HorizontalFrame horizontal_frame(const HPoint& p);

/// Squared projections of the horizontal gradient onto (e_rho, e_phi);
/// their sum is |grad_{H^1} u|^2.
struct GradientSplit {
    double radial_sq = 0.0;
    double angular_sq = 0.0;
};

GradientSplit gradient_split(const HField& u, const HPoint& p);

/// 2-jet of an angular profile f(theta, phi).
struct AngularJet {
    double f = 0.0;
    double ft = 0.0;  // df/dtheta
    double fp = 0.0;  // df/dphi
    double ftt = 0.0;
    double ftp = 0.0; // d2f/{dphi dtheta}
    double fpp = 0.0;
};

/// Jet of a phi-only profile.
struct PhiJet {
    double f = 0.0;
    double fp = 0.0;
    double fpp = 0.0;
};

/// Sublaplacian of rho^alpha * f(theta, phi) in polar form.
double sublaplacian_polar(double alpha, const std::function<AngularJet(double, double)>& f,
                          const PolarCoord& c);

/// Phi-only branch: rho^{alpha-2} (alpha(alpha+2) sin(phi) f + 4 (sin(phi) f')').
double sublaplacian_polar(double alpha, const std::function<PhiJet(double)>& f,
                          const PolarCoord& c);

/// Sublaplacians of the coordinate functions, assembled from the gauge
/// derivative formulas and chain rules (an algebraic route independent of
/// the closed forms 3(x^2+y^2)/rho^3, 4 cos(phi)/rho^2, 0).
struct PolarLaplacians {
    double lap_rho = 0.0;
    double lap_phi = 0.0;
    double lap_theta = 0.0;
};

PolarLaplacians polar_laplacians(const HPoint& p);

namespace detail {
// Raw gradient components without the near-axis guard; (0, 0) on the axis.
PolarGradients polar_gradients_unchecked(const HPoint& p);
bool on_characteristic_axis(const HPoint& p);
} // namespace detail

} // namespace acfh
