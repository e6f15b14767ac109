#pragma once

#include <span>
#include <string>
#include <vector>

#include "acfh/heisenberg.hpp"

namespace acfh {

/// Two nonnegative subharmonic phases on the unit gauge ball with disjoint
/// supports, both vanishing at the group origin. `note` carries informational
/// remarks attached by the factories (never an error).
struct HTwoPhasePair {
    HField plus;
    HField minus;
    std::string note;
};

struct HGridSpec {
    int n_rho = 64;
    int n_phi = 128;
    int n_theta = 128;
};

/// J_beta(r) = r^{-beta} * prod_i int_{B_r} |grad_{H^1} u_i|^2 / |zeta|^2 dzeta.
double j_beta(const HTwoPhasePair& pair, double r, double beta, const HGridSpec& grid = {});

/// int_{dB_1} |grad u|^2 / sqrt(x^2+y^2) dP  /  int_{B_1} |grad u|^2 / |zeta|^2 dzeta.
/// The surface and volume grids share their angular rules so that support
/// indicators of positive-part fields cancel in the ratio.
double boundary_quotient(const HField& u, const HGridSpec& grid = {});

/// boundary_quotient(plus) + boundary_quotient(minus) - beta; the logarithmic
/// derivative J'(1)/J(1).
double j_log_derivative(const HTwoPhasePair& pair, double beta, const HGridSpec& grid = {});

/// Comparison of the boundary-quotient sum against 2 * sum(sqrt(1+lambda_i)-1)
/// for caller-certified lower bounds lambda_i of the angular Rayleigh quotient
/// on the two supports.
struct LowerBoundReport {
    double left_plus = 0.0;
    double left_minus = 0.0;
    double left = 0.0;
    double alpha_plus = 0.0;
    double alpha_minus = 0.0;
    double right = 0.0;
    bool degenerate_plus = false;
    bool degenerate_minus = false;
    bool has_verdict = false;
    bool pass = false;
    double tolerance = 0.0;
};

LowerBoundReport lower_bound_check(const HTwoPhasePair& pair,
                                   const std::array<double, 2>& lambda_estimates,
                                   const HGridSpec& grid = {}, double tolerance = 2e-3);

/// Per-radius ratio of the kernel-weighted gradient energy on B_rho against
/// rho^{-4} * int_{B_{2rho} \ B_rho} u^2; finiteness and stability of the sup
/// is the testable content.
struct GradientBoundRow {
    double rho = 0.0;
    double energy = 0.0;
    double scaled_mass = 0.0;
    double ratio = 0.0;
};

struct GradientBoundReport {
    std::vector<GradientBoundRow> rows;
    double sup_ratio = 0.0;
};

GradientBoundReport gradient_bound_diagnostic(const HField& u, std::span<const double> rho_values,
                                              const HGridSpec& grid = {});

} // namespace acfh
