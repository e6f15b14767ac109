#include "acfh/fields.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "acfh/euclid_eigen.hpp"
#include "acfh/heis_eigen.hpp"
#include "acfh/heis_polar.hpp"
#include "acfh/sturm_liouville.hpp"

namespace acfh::fields {

namespace {
constexpr double pi = std::numbers::pi;
} // namespace

EuclidField x3_plus() {
    EuclidField f;
    f.value = [](const Vec3& x) { return std::max(x[2], 0.0); };
    f.gradient = [](const Vec3& x) { return x[2] > 0.0 ? Vec3{0.0, 0.0, 1.0} : Vec3{}; };
    f.support = [](const Vec3& x) { return x[2] > 0.0; };
    return f;
}

EuclidField x3_minus() {
    EuclidField f;
    f.value = [](const Vec3& x) { return std::max(-x[2], 0.0); };
    f.gradient = [](const Vec3& x) { return x[2] < 0.0 ? Vec3{0.0, 0.0, -1.0} : Vec3{}; };
    f.support = [](const Vec3& x) { return x[2] < 0.0; };
    return f;
}

EuclidField euclid_zero() {
    EuclidField f;
    f.value = [](const Vec3&) { return 0.0; };
    f.gradient = [](const Vec3&) { return Vec3{}; };
    f.support = [](const Vec3&) { return false; };
    return f;
}

EuclidField cap_eigenfield(double phi0, bool south, int mesh) {
    const EigenSolution eig = cap_eigenvalue(EuclidCap{phi0, 3}, mesh);
    const double alpha = eig.alpha;
    auto profile = std::make_shared<const OdeSolution>(
        integrate_cot_ode(1.0, eig.lambda, 0.0, phi0, 16384, /*regular_start=*/true));
    const double zsign = south ? -1.0 : 1.0;

    EuclidField f;
    f.value = [=](const Vec3& x) {
        const double r = std::hypot(x[0], x[1], x[2]);
        if (r == 0.0) return 0.0;
        const double phi = std::acos(std::clamp(zsign * x[2] / r, -1.0, 1.0));
        if (phi >= phi0) return 0.0;
        return std::pow(r, alpha) * std::max(profile->value(phi), 0.0);
    };
    f.gradient = [=](const Vec3& x) {
        const double r = std::hypot(x[0], x[1], x[2]);
        if (r == 0.0) return Vec3{};
        const double phi = std::acos(std::clamp(zsign * x[2] / r, -1.0, 1.0));
        if (phi >= phi0) return Vec3{};
        const double F = profile->value(phi);
        const double Fp = profile->deriv(phi);
        const double ra = std::pow(r, alpha - 1.0);
        const Vec3 rhat{x[0] / r, x[1] / r, x[2] / r};
        const double R = std::hypot(x[0], x[1]);
        Vec3 phat{};
        if (R > 1e-300) {
            const double c = std::cos(phi), s = std::sin(phi);
            phat = Vec3{c * x[0] / R, c * x[1] / R, -zsign * s};
        }
        return Vec3{ra * (alpha * F * rhat[0] + Fp * phat[0]),
                    ra * (alpha * F * rhat[1] + Fp * phat[1]),
                    ra * (alpha * F * rhat[2] + Fp * phat[2])};
    };
    f.support = [=](const Vec3& x) {
        const double r = std::hypot(x[0], x[1], x[2]);
        if (r == 0.0) return false;
        return std::acos(std::clamp(zsign * x[2] / r, -1.0, 1.0)) < phi0;
    };
    return f;
}

TwoPhasePair x3_pair() { return TwoPhasePair{x3_plus(), x3_minus()}; }

TwoPhasePair complementary_cap_pair(double phi0, int mesh) {
    if (!(phi0 > 0.0 && phi0 < pi))
        throw std::invalid_argument("complementary_cap_pair: phi0 must lie in (0, pi)");
    return TwoPhasePair{cap_eigenfield(phi0, false, mesh),
                        cap_eigenfield(pi - phi0, true, mesh)};
}

HField linear_plus(double a, double b) {
    if (a == 0.0 && b == 0.0)
        throw std::invalid_argument("linear_plus: (a, b) must not both vanish");
    HField u;
    u.value = [=](const HPoint& p) { return std::max(a * p.x[0] + b * p.y[0], 0.0); };
    u.horizontal_gradient = [=](const HPoint& p) {
        return a * p.x[0] + b * p.y[0] > 0.0 ? std::vector<double>{a, b}
                                             : std::vector<double>{0.0, 0.0};
    };
    u.sublaplacian = [](const HPoint&) { return 0.0; };
    return u;
}

HField linear_minus(double a, double b) { return linear_plus(-a, -b); }

HField t_plus(double a) {
    HField u;
    u.value = [=](const HPoint& p) { return a * std::max(p.t, 0.0); };
    u.horizontal_gradient = [=](const HPoint& p) {
        return p.t > 0.0 ? std::vector<double>{2.0 * a * p.y[0], -2.0 * a * p.x[0]}
                         : std::vector<double>{0.0, 0.0};
    };
    u.sublaplacian = [](const HPoint&) { return 0.0; };
    return u;
}

HField t_minus(double b) {
    HField u;
    u.value = [=](const HPoint& p) { return b * std::max(-p.t, 0.0); };
    u.horizontal_gradient = [=](const HPoint& p) {
        return p.t < 0.0 ? std::vector<double>{-2.0 * b * p.y[0], 2.0 * b * p.x[0]}
                         : std::vector<double>{0.0, 0.0};
    };
    u.sublaplacian = [](const HPoint&) { return 0.0; };
    return u;
}

HField h_zero() {
    HField u;
    u.value = [](const HPoint&) { return 0.0; };
    u.horizontal_gradient = [](const HPoint&) { return std::vector<double>{0.0, 0.0}; };
    u.sublaplacian = [](const HPoint&) { return 0.0; };
    return u;
}

HField cap_eigenfield_h1(double phi0, double phi1, int mesh) {
    const EigenSolution eig = sl_eigen(phi_interval(phi0, phi1), mesh);
    const double alpha = eig.alpha;
    const double mu = eig.lambda / 4.0;

    std::shared_ptr<const OdeSolution> profile;
    bool reflected = false;
    if (phi0 == 0.0) {
        profile = std::make_shared<const OdeSolution>(
            integrate_cot_ode(1.0, mu, 0.0, phi1, 16384, true));
    } else if (phi1 == pi) {
        profile = std::make_shared<const OdeSolution>(
            integrate_cot_ode(1.0, mu, 0.0, pi - phi0, 16384, true));
        reflected = true;
    } else {
        profile = std::make_shared<const OdeSolution>(
            integrate_cot_ode(1.0, mu, phi0, phi1, 16384, false, 0.0, 1.0));
    }
    const auto prof_value = [=](double phi) {
        return reflected ? profile->value(pi - phi) : profile->value(phi);
    };
    const auto prof_deriv = [=](double phi) {
        return reflected ? -profile->deriv(pi - phi) : profile->deriv(phi);
    };

    HField u;
    u.value = [=](const HPoint& p) {
        const double rho = gauge_norm(p);
        if (rho == 0.0) return 0.0;
        const double phi = std::acos(std::clamp(p.t / (rho * rho), -1.0, 1.0));
        if (phi <= phi0 || phi >= phi1) return 0.0;
        return std::pow(rho, alpha) * std::max(prof_value(phi), 0.0);
    };
    u.horizontal_gradient = [=](const HPoint& p) {
        const double rho = gauge_norm(p);
        if (rho == 0.0) return std::vector<double>{0.0, 0.0};
        const double phi = std::acos(std::clamp(p.t / (rho * rho), -1.0, 1.0));
        if (phi <= phi0 || phi >= phi1) return std::vector<double>{0.0, 0.0};
        const double f = prof_value(phi);
        const double fp = prof_deriv(phi);
        const PolarGradients g = detail::polar_gradients_unchecked(p);
        const double cr = alpha * std::pow(rho, alpha - 1.0) * f;
        const double cp = std::pow(rho, alpha) * fp;
        return std::vector<double>{cr * g.grad_rho[0] + cp * g.grad_phi[0],
                                   cr * g.grad_rho[1] + cp * g.grad_phi[1]};
    };
    u.sublaplacian = [](const HPoint&) { return 0.0; };
    return u;
}

HField phi_profile_field(std::function<PhiJet(double)> jet) {
    HField u;
    u.value = [jet](const HPoint& p) {
        const double rho = gauge_norm(p);
        if (rho == 0.0) return 0.0;
        return jet(std::acos(std::clamp(p.t / (rho * rho), -1.0, 1.0))).f;
    };
    u.horizontal_gradient = [jet](const HPoint& p) {
        const double rho = gauge_norm(p);
        if (rho == 0.0) return std::vector<double>{0.0, 0.0};
        const double phi = std::acos(std::clamp(p.t / (rho * rho), -1.0, 1.0));
        const double fp = jet(phi).fp;
        const PolarGradients g = detail::polar_gradients_unchecked(p);
        return std::vector<double>{fp * g.grad_phi[0], fp * g.grad_phi[1]};
    };
    return u;
}

HField poly_field(const Poly3& p) {
    auto px = std::make_shared<const Poly3>(p.applyX());
    auto py = std::make_shared<const Poly3>(p.applyY());
    auto lap = std::make_shared<const Poly3>(p.applyX().applyX() + p.applyY().applyY());
    auto body = std::make_shared<const Poly3>(p);

    HField u;
    u.value = [body](const HPoint& q) { return (*body)(q.x[0], q.y[0], q.t); };
    u.horizontal_gradient = [px, py](const HPoint& q) {
        return std::vector<double>{(*px)(q.x[0], q.y[0], q.t), (*py)(q.x[0], q.y[0], q.t)};
    };
    u.sublaplacian = [lap](const HPoint& q) { return (*lap)(q.x[0], q.y[0], q.t); };
    return u;
}

HTwoPhasePair linear_pair(double a, double b) {
    return HTwoPhasePair{linear_plus(a, b), linear_minus(a, b), ""};
}

HTwoPhasePair t_pair(double a, double b) {
    if (!(a > 0.0 && b > 0.0)) throw std::invalid_argument("t_pair: coefficients must be > 0");
    return HTwoPhasePair{t_plus(a), t_minus(b),
                         "origin is a characteristic point of {t = 0}; the pair cannot be a "
                         "classical two-phase solution there"};
}

HTwoPhasePair cap_pair_h1(double phi_plus, double phi_minus, int mesh) {
    if (!(0.0 < phi_plus && phi_plus <= phi_minus && phi_minus < pi))
        throw std::invalid_argument("cap_pair_h1: need 0 < phi_plus <= phi_minus < pi");
    return HTwoPhasePair{cap_eigenfield_h1(0.0, phi_plus, mesh),
                         cap_eigenfield_h1(phi_minus, pi, mesh), ""};
}

} // namespace acfh::fields
