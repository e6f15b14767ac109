#pragma once

#include <array>
#include <functional>

namespace acfh {

using Vec3 = std::array<double, 3>;

/// Nonnegative scalar field on the closed unit ball of R^3, vanishing at the
/// origin; the support predicate marks {u > 0}. The gradient is analytic when
/// provided, otherwise central finite differences with step fd_step.
struct EuclidField {
    std::function<double(const Vec3&)> value;
    std::function<Vec3(const Vec3&)> gradient;
    std::function<bool(const Vec3&)> support;
    double fd_step = 1e-5;
};

Vec3 euclid_gradient(const EuclidField& u, const Vec3& x);

/// Two nonnegative phases with disjoint supports, both vanishing at 0.
struct TwoPhasePair {
    EuclidField plus;
    EuclidField minus;
};

struct EGridSpec {
    int n_rho = 64;
    int n_phi = 128;
    int n_theta = 128;
};

/// Phi(r) = r^{-4} I_1(r) I_2(r) with I_i = int_{B_r} |grad u_i|^2 / |x| dx.
double phi_functional(const TwoPhasePair& pair, double r, const EGridSpec& grid = {});

/// (u)_r(x) = u(r x)/r on the unit ball.
EuclidField rescale(const EuclidField& u, double r);

/// int_{dB_1} |grad u|^2 dsigma  /  int_{B_1} |grad u|^2 / |x| dx.
double j_ratio(const EuclidField& u, const EGridSpec& grid = {});

/// -4 + j_ratio(plus) + j_ratio(minus); equals r Phi'(r)/Phi(r) at r = 1.
double phi_log_derivative(const TwoPhasePair& pair, const EGridSpec& grid = {});

} // namespace acfh
