#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "acfh/errors.hpp"

namespace acfh {

/// A point of H^n in Cartesian coordinates (x, y, t), x and y in R^n.
struct HPoint {
    std::vector<double> x;
    std::vector<double> y;
    double t = 0.0;

    std::size_t n() const { return x.size(); }
};

inline HPoint h1(double x, double y, double t) { return HPoint{{x}, {y}, t}; }

HPoint group_mul(const HPoint& p, const HPoint& m);
HPoint group_inverse(const HPoint& p);
HPoint dilate(double r, const HPoint& p);

/// Gauge norm ((|x|^2+|y|^2)^2 + t^2)^{1/4}; 1-homogeneous under dilations.
double gauge_norm(const HPoint& p);

/// Left-invariant gauge distance |p^{-1} o q|.
double koranyi_distance(const HPoint& p, const HPoint& q);

/// Scalar field on H^n. The horizontal gradient, when analytic, returns the
/// 2n coefficients on (X_1..X_n, Y_1..Y_n); otherwise central differences
/// along the straight flows of the vector fields are used. fd_step is the
/// first-derivative step, fd_step2 the second-derivative step; both are
/// scaled by max(1, |P|).
struct HField {
    std::function<double(const HPoint&)> value;
    std::function<std::vector<double>(const HPoint&)> horizontal_gradient;
    double fd_step = 1e-5;
    double fd_step2 = 1e-4;
    std::function<double(const HPoint&)> sublaplacian; // optional analytic
};

std::vector<double> horizontal_gradient(const HField& u, const HPoint& p);
double horizontal_gradient_sq(const HField& u, const HPoint& p);
double sublaplacian(const HField& u, const HPoint& p);

/// First and second derivatives of the gauge norm along X_i, Y_i, from the
/// closed forms; grad_sq and lap are assembled by summing components.
struct GaugeDerivatives {
    std::vector<double> dX, dY;   // X_i N, Y_i N
    std::vector<double> dXX, dYY; // X_i^2 N, Y_i^2 N
    double grad_sq = 0.0;
    double lap = 0.0;
};

GaugeDerivatives gauge_derivatives(const HPoint& p);

/// Sublaplacian of |P|^{2-Q}, Q = 2n+2, assembled from the gauge derivative
/// formulas without algebraic simplification; vanishes identically.
double fundamental_solution_residual(const HPoint& p, int n);

/// H-perimeter density of a C^1 surface in H^1 against Euclidean surface
/// measure: (<X, nu>^2 + <Y, nu>^2)^{1/2} for the unit Euclidean normal nu.
double h_perimeter_density(const std::array<double, 3>& unit_normal, const HPoint& p);

} // namespace acfh
