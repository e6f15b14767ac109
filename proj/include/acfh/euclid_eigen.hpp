#pragma once

#include <vector>

namespace acfh {

/// Spherical cap on S^{n-1} of half-angle phi0 about the polar axis.
struct EuclidCap {
    double phi0 = 0.0;
    int n = 3;
};

/// First eigenpair with the characteristic constant attached,
/// alpha^2 + (n-2) alpha = lambda (n-2 = 2 in the Heisenberg case).
struct EigenSolution {
    double lambda = 0.0;
    double alpha = 0.0;
    std::vector<double> phi;
    std::vector<double> eigenfunction;
    int mesh_size = 0;
    double est_error = 0.0;
};

/// Smallest lambda of F'' + (n-2) cot(phi) F' + lambda F = 0 on (0, phi0)
/// with F regular at 0 and F(phi0) = 0; Richardson-extrapolated over two
/// meshes, eigenfunction reported on the fine mesh.
EigenSolution cap_eigenvalue(const EuclidCap& cap, int mesh);

/// The nonnegative root of alpha^2 + (n-2) alpha - lambda = 0.
double characteristic_constant(double lambda, int n);

/// beta in (0,1) with (beta*lambda)^{1/2} equal to the characteristic constant.
double beta_weight(double lambda, int n);

/// Friedland-Hayman lower-bound profile; convex, decreasing, psi(1/2) = 1.
double psi(double s);

/// psi(s1) + psi(s2) for disjoint phases (s1 + s2 <= 1); always >= 2.
double cap_sum_bound(double s1, double s2);

/// Area fraction of the cap of half-angle phi0 on S^{n-1}.
double cap_area_fraction(double phi0, int n);

/// Inverse of cap_area_fraction in phi0.
double cap_half_angle(double s, int n);

} // namespace acfh
