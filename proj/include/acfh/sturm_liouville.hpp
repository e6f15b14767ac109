#pragma once

#include <functional>
#include <vector>

namespace acfh {

/// Self-adjoint problem  -scale * (w f')' = lambda * w f  on (a, b).
/// An endpoint is either Dirichlet or singular-regular; the latter is the
/// natural (zero-flux) condition and is admissible only where w vanishes,
/// i.e. at phi = 0 or pi for the weights sin^k(phi).
struct SlProblem {
    double a = 0.0;
    double b = 0.0;
    std::function<double(double)> weight;
    double scale = 1.0;
    bool dirichlet_left = true;
    bool dirichlet_right = true;
};

/// Smallest eigenpair of the cell-centered finite-volume discretization.
struct SlMeshSolution {
    double lambda = 0.0;
    std::vector<double> centers;
    std::vector<double> values; // positive, max-normalized
};

SlMeshSolution sl_fv_smallest(const SlProblem& p, int n_cells);

/// Solves at n_cells and 2*n_cells and Richardson-extrapolates the (second
/// order) eigenvalue; the eigenfunction is reported on the fine mesh.
struct SlResult {
    double lambda = 0.0;
    double est_error = 0.0;
    int mesh_size = 0;
    std::vector<double> centers;
    std::vector<double> values;
};

SlResult sl_solve(const SlProblem& p, int n_cells);

// --- Shooting path (independent of the finite-volume discretization) --------

/// Dense solution of  f'' + c*cot(phi)*f' + mu*f = 0  on a uniform grid,
/// with cubic Hermite evaluation between nodes.
struct OdeSolution {
    double a = 0.0;
    double h = 0.0;
    std::vector<double> f;
    std::vector<double> fp;

    double value(double phi) const;
    double deriv(double phi) const;
};

/// Integrates from the left end. With regular_start the left end must be a
/// zero of sin (series expansion f = 1 - mu phi^2/(2(c+1)) + ... seeds the
/// first step); otherwise the initial data (fa, fpa) is used directly.
OdeSolution integrate_cot_ode(double c, double mu, double a, double b, int steps,
                              bool regular_start, double fa = 0.0, double fpa = 1.0);

/// Smallest mu for which the shot solution vanishes at b.
double shoot_smallest_mu(double c, double a, double b, bool regular_left, int steps);

} // namespace acfh
