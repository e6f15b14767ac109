#pragma once

#include <array>
#include <functional>

#include "acfh/euclid_eigen.hpp"
#include "acfh/heis_polar.hpp"
#include "acfh/heisenberg.hpp"

namespace acfh {

enum class EndpointKind { dirichlet, singular_regular };

/// phi-interval on the unit gauge sphere. Endpoints at 0 or pi default to
/// the singular-regular (bounded solution) condition, interior endpoints to
/// Dirichlet; singular-regular is rejected away from 0 and pi.
struct PhiInterval {
    double phi0 = 0.0;
    double phi1 = 0.0;
    EndpointKind left = EndpointKind::dirichlet;
    EndpointKind right = EndpointKind::dirichlet;
};

PhiInterval phi_interval(double phi0, double phi1);
PhiInterval phi_interval(double phi0, double phi1, EndpointKind left, EndpointKind right);

/// Smallest lambda of 4 (sin(phi) f')' = -lambda sin(phi) f on the interval,
/// with alpha = sqrt(1 + lambda) - 1 attached.
EigenSolution sl_eigen(const PhiInterval& interval, int mesh);

/// The nonnegative root of alpha^2 + 2 alpha - lambda = 0.
double alpha_h1(double lambda);

/// Solves the (0, phi0) gauge-sphere problem and the dimension-3 spherical
/// cap problem independently; their eigenvalues satisfy lambda_h = 4 lambda_e.
struct BridgeResult {
    double lambda_h = 0.0;
    double lambda_e = 0.0;
    EigenSolution heis;
    EigenSolution euclid;
};

BridgeResult euclid_bridge(double phi0, int mesh = 2048);

struct SphereGridSpec {
    int n_phi = 128;
    int n_theta = 128;
};

/// Evaluates (not minimizes) the angular Rayleigh quotient of the field over
/// the band phi in (phi0, phi1) of the unit gauge sphere:
///   int |grad^phi u|^2 / sqrt(x^2+y^2) dP  /  int u^2 sqrt(x^2+y^2) dP.
double rayleigh_phi(const HField& u, const PhiInterval& support,
                    const SphereGridSpec& grid = {});

struct ThetaPhiRect {
    double theta0 = 0.0;
    double theta1 = 0.0;
    double phi0 = 0.0;
    double phi1 = 0.0;
};

/// The two-variable quotient with integrand
///   (1/sin phi) f_t^2 + 4 sin phi f_t f_p + 4 sin phi f_p^2
/// against sin phi f^2, evaluated by quadrature on a rectangle.
double rayleigh_2d(const std::function<AngularJet(double, double)>& f,
                   const ThetaPhiRect& domain, const SphereGridSpec& grid = {});

/// The divergence-form coefficient matrix
///   [ 1/sin phi        (4+2a) sin phi ]
///   [ -2a sin phi      4 sin phi      ].
std::array<std::array<double, 2>, 2> divergence_matrix(double theta, double phi, double alpha);

} // namespace acfh
