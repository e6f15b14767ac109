#pragma once

#include "acfh/euclid_acf.hpp"
#include "acfh/heis_mono.hpp"
#include "acfh/heis_polar.hpp"
#include "acfh/poly.hpp"

namespace acfh::fields {

// --- Euclidean test fields ----------------------------------------------------

EuclidField x3_plus();
EuclidField x3_minus();
EuclidField euclid_zero();

/// Homogeneous harmonic field rho^alpha F(phi) on the cone over a spherical
/// cap of half-angle phi0 (n = 3), extended by zero; `south` reflects the cap
/// about the equator.
EuclidField cap_eigenfield(double phi0, bool south = false, int mesh = 1024);

TwoPhasePair x3_pair();
TwoPhasePair complementary_cap_pair(double phi0, int mesh = 1024);

// --- Heisenberg test fields ----------------------------------------------------

/// (a x + b y)^+ with exact horizontal gradient (a, b) on the support.
HField linear_plus(double a, double b);
HField linear_minus(double a, double b);

/// a t^+ / b t^- with horizontal gradient a(2y, -2x) on the support.
HField t_plus(double a = 1.0);
HField t_minus(double b = 1.0);

HField h_zero();

/// H^1-harmonic homogeneous field rho^alpha f(phi) supported on the
/// phi-interval (phi0, phi1) of the cone, extended by zero.
HField cap_eigenfield_h1(double phi0, double phi1, int mesh = 1024);

/// u = f(phi(P)), the 0-homogeneous extension of a phi-profile; jet supplies
/// f and f'.
HField phi_profile_field(std::function<PhiJet(double)> jet);

/// Polynomial field with exact horizontal derivatives.
HField poly_field(const Poly3& p);

HTwoPhasePair linear_pair(double a, double b);
HTwoPhasePair t_pair(double a = 1.0, double b = 1.0);
HTwoPhasePair cap_pair_h1(double phi_plus, double phi_minus, int mesh = 1024);

} // namespace acfh::fields
