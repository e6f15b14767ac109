#include "acfh/euclid_eigen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "acfh/quadrature.hpp"
#include "acfh/sturm_liouville.hpp"

namespace acfh {

namespace {
constexpr double pi = std::numbers::pi;

void validate_cap(const EuclidCap& cap) {
    if (!(cap.phi0 > 0.0 && cap.phi0 < pi))
        throw std::invalid_argument("cap_eigenvalue: phi0 must lie in (0, pi)");
    if (cap.n < 3) throw std::invalid_argument("cap_eigenvalue: dimension must be >= 3");
}
} // namespace

EigenSolution cap_eigenvalue(const EuclidCap& cap, int mesh) {
    validate_cap(cap);
    if (mesh < 16) throw std::invalid_argument("cap_eigenvalue: mesh must be >= 16");

    SlProblem p;
    p.a = 0.0;
    p.b = cap.phi0;
    const int k = cap.n - 2;
    p.weight = [k](double phi) { return std::pow(std::sin(phi), k); };
    p.scale = 1.0;
    p.dirichlet_left = false; // regularity at the sin^{n-2} zero
    p.dirichlet_right = true;

    const SlResult r = sl_solve(p, mesh);
    EigenSolution out;
    out.lambda = r.lambda;
    out.alpha = characteristic_constant(r.lambda, cap.n);
    out.phi = r.centers;
    out.eigenfunction = r.values;
    out.mesh_size = r.mesh_size;
    out.est_error = r.est_error;
    return out;
}

double characteristic_constant(double lambda, int n) {
    if (lambda < 0.0) throw std::invalid_argument("characteristic_constant: lambda must be >= 0");
    if (n < 3) throw std::invalid_argument("characteristic_constant: dimension must be >= 3");
    const double m = n - 2.0;
    return 2.0 * lambda / (m + std::sqrt(m * m + 4.0 * lambda));
}

double beta_weight(double lambda, int n) {
    if (!(lambda > 0.0)) throw std::invalid_argument("beta_weight: lambda must be > 0");
    if (n < 3) throw std::invalid_argument("beta_weight: dimension must be >= 3");
    const double m = n - 2.0;
    const double q = 2.0 * std::sqrt(lambda) / (m + std::sqrt(m * m + 4.0 * lambda));
    return q * q;
}

double psi(double s) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("psi: s must lie in (0, 1)");
    if (s <= 0.25) return 0.5 * std::log(1.0 / (4.0 * s)) + 1.5;
    return 2.0 * (1.0 - s);
}

double cap_sum_bound(double s1, double s2) {
    if (!(s1 > 0.0 && s1 < 1.0 && s2 > 0.0 && s2 < 1.0))
        throw std::invalid_argument("cap_sum_bound: fractions must lie in (0, 1)");
    if (s1 + s2 > 1.0)
        throw std::invalid_argument("cap_sum_bound: overlapping phases (s1 + s2 > 1)");
    return psi(s1) + psi(s2);
}

double cap_area_fraction(double phi0, int n) {
    if (!(phi0 >= 0.0 && phi0 <= pi))
        throw std::invalid_argument("cap_area_fraction: phi0 must lie in [0, pi]");
    if (n < 3) throw std::invalid_argument("cap_area_fraction: dimension must be >= 3");
    if (n == 3) return 0.5 * (1.0 - std::cos(phi0));
    const int k = n - 2;
    const auto seg = [&](double hi) {
        if (hi <= 0.0) return 0.0;
        const QuadratureRule1D q = gauss_legendre(128, 0.0, hi);
        double s = 0.0;
        for (int i = 0; i < q.order; ++i) s += q.weights[i] * std::pow(std::sin(q.nodes[i]), k);
        return s;
    };
    return seg(phi0) / seg(pi);
}

double cap_half_angle(double s, int n) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("cap_half_angle: s must lie in (0, 1)");
    if (n == 3) return std::acos(1.0 - 2.0 * s);
    double lo = 0.0, hi = pi;
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (cap_area_fraction(mid, n) < s)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace acfh
