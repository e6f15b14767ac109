#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "acfh/fields.hpp"
#include "acfh/heis_polar.hpp"
#include "acfh/poly.hpp"
#include "acfh/quadrature.hpp"

using namespace acfh;

namespace {

std::mt19937_64 make_rng(unsigned s) { return std::mt19937_64(s); }

HPoint random_off_axis(std::mt19937_64& rng, double min_sin = 1e-3) {
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (;;) {
        const HPoint p = h1(u(rng), u(rng), u(rng));
        const double rho = gauge_norm(p);
        if (rho < 0.3) continue;
        if (p.x[0] * p.x[0] + p.y[0] * p.y[0] >= min_sin * rho * rho) return p;
    }
}

} // namespace

TEST_CASE("polar coordinate map") {
    const PolarCoord c1 = to_polar(h1(1, 0, 0));
    CHECK(c1.rho == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c1.phi == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(c1.theta == doctest::Approx(0.0).epsilon(1e-15));
    CHECK_FALSE(c1.degenerate_axis);

    const PolarCoord c2 = to_polar(h1(0, 0, 1));
    CHECK(c2.rho == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c2.phi == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c2.degenerate_axis);
    CHECK(c2.theta == 0.0);

    CHECK_THROWS_AS(to_polar(h1(0, 0, 0)), PoleError);
    CHECK_THROWS_AS(from_polar(0.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(from_polar(1.0, 4.0, 0.0), std::invalid_argument);

    auto rng = make_rng(21);
    for (int k = 0; k < 10000; ++k) {
        const HPoint p = random_off_axis(rng);
        const PolarCoord c = to_polar(p);
        const HPoint q = from_polar(c);
        CHECK(std::abs(q.x[0] - p.x[0]) <= 1e-12);
        CHECK(std::abs(q.y[0] - p.y[0]) <= 1e-12);
        CHECK(std::abs(q.t - p.t) <= 1e-12 * std::max(1.0, std::abs(p.t)));
    }
}

TEST_CASE("polar gradients: lemma identities") {
    auto rng = make_rng(22);
    const auto dot2 = [](const std::array<double, 2>& a, const std::array<double, 2>& b) {
        return a[0] * b[0] + a[1] * b[1];
    };
    const HPoint p0 = h1(1, 1, 1);
    const PolarGradients g0 = polar_gradients(p0);
    CHECK(dot2(g0.grad_rho, g0.grad_rho) ==
          doctest::Approx(2.0 / std::pow(gauge_norm(p0), 2.0)).epsilon(1e-13));

    for (int k = 0; k < 5000; ++k) {
        const HPoint p = random_off_axis(rng);
        const double s2 = p.x[0] * p.x[0] + p.y[0] * p.y[0];
        const double rho = gauge_norm(p);
        const PolarGradients g = polar_gradients(p);
        CHECK(std::abs(dot2(g.grad_phi, g.grad_rho)) <=
              1e-12 * std::sqrt(dot2(g.grad_phi, g.grad_phi) * dot2(g.grad_rho, g.grad_rho)));
        CHECK(dot2(g.grad_phi, g.grad_phi) ==
              doctest::Approx(4.0 * s2 / std::pow(rho, 4.0)).epsilon(1e-12));
        CHECK(dot2(g.grad_theta, g.grad_theta) == doctest::Approx(1.0 / s2).epsilon(1e-12));
        CHECK(dot2(g.grad_rho, g.grad_theta) ==
              doctest::Approx(-p.t / std::pow(rho, 3.0)).epsilon(1e-10));
        CHECK(dot2(g.grad_phi, g.grad_theta) ==
              doctest::Approx(2.0 * s2 / std::pow(rho, 4.0)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(polar_gradients(h1(0, 0, 1)), CharacteristicAxis);
}

TEST_CASE("horizontal frame is orthonormal") {
    auto rng = make_rng(23);
    for (int k = 0; k < 2000; ++k) {
        const HorizontalFrame f = horizontal_frame(random_off_axis(rng));
        CHECK(std::abs(f.e_rho[0] * f.e_rho[0] + f.e_rho[1] * f.e_rho[1] - 1.0) <= 1e-12);
        CHECK(std::abs(f.e_phi[0] * f.e_phi[0] + f.e_phi[1] * f.e_phi[1] - 1.0) <= 1e-12);
        CHECK(std::abs(f.e_rho[0] * f.e_phi[0] + f.e_rho[1] * f.e_phi[1]) <= 1e-12);
    }
}

TEST_CASE("gradient split") {
    auto rng = make_rng(24);

    // Purely radial field rho^alpha.
    HField radial;
    radial.value = [](const HPoint& p) { return std::pow(gauge_norm(p), 1.7); };
    radial.horizontal_gradient = [](const HPoint& p) {
        const GaugeDerivatives d = gauge_derivatives(p);
        const double c = 1.7 * std::pow(gauge_norm(p), 0.7);
        return std::vector<double>{c * d.dX[0], c * d.dY[0]};
    };
    for (int k = 0; k < 200; ++k) {
        const HPoint p = random_off_axis(rng, 1e-2);
        const GradientSplit s = gradient_split(radial, p);
        CHECK(std::abs(s.angular_sq) <= 1e-20 * std::max(1.0, s.radial_sq));
    }

    // u = t at (1, 0, 0): |grad t|^2 = 4(x^2+y^2) = 4.
    const HField ut = fields::poly_field(Poly3::monomial(1.0, 0, 0, 1));
    const GradientSplit st = gradient_split(ut, h1(1, 0, 0));
    CHECK(st.radial_sq + st.angular_sq == doctest::Approx(4.0).epsilon(1e-13));

    // Random polynomial fields: split sums to the squared gradient.
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int f = 0; f < 5; ++f) {
        Poly3 p;
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; i + j <= 2; ++j)
                for (int k2 = 0; k2 <= 1; ++k2) p = p + Poly3::monomial(coef(rng), i, j, k2);
        const HField u = fields::poly_field(p);
        for (int k = 0; k < 2000; ++k) {
            const HPoint q = random_off_axis(rng);
            const GradientSplit s = gradient_split(u, q);
            const double g2 = horizontal_gradient_sq(u, q);
            CHECK(std::abs(s.radial_sq + s.angular_sq - g2) <= 1e-10 * std::max(g2, 1e-12));
        }
    }
}

TEST_CASE("polar sublaplacian: phi-only branch") {
    // u = t = rho^2 cos(phi) is harmonic.
    const auto cosj = [](double phi) {
        return PhiJet{std::cos(phi), -std::sin(phi), -std::cos(phi)};
    };
    // u = rho^{2-Q} = rho^{-2} is the fundamental solution.
    const auto onej = [](double) { return PhiJet{1.0, 0.0, 0.0}; };
    auto rng = make_rng(25);
    std::uniform_real_distribution<double> urho(0.4, 1.6), uphi(0.15, kPi - 0.15);
    for (int k = 0; k < 500; ++k) {
        const PolarCoord c{urho(rng), uphi(rng), 1.0, false};
        CHECK(std::abs(sublaplacian_polar(2.0, cosj, c)) <= 1e-13);
        CHECK(std::abs(sublaplacian_polar(-2.0, onej, c)) <= 1e-13);
    }
    CHECK_THROWS_AS(sublaplacian_polar(1.0, std::function<PhiJet(double)>(onej),
                                       PolarCoord{1.0, 0.0, 0.0, true}),
                    CharacteristicAxis);
}

TEST_CASE("polar sublaplacian: theta branch against Cartesian forms") {
    // u = x: alpha = 1, f = sqrt(sin phi) cos(theta); harmonic.
    const auto xjet = [](double theta, double phi) {
        const double s = std::sin(phi), c = std::cos(phi);
        const double w = std::sqrt(s), ct = std::cos(theta), st = std::sin(theta);
        AngularJet j;
        j.f = w * ct;
        j.ft = -w * st;
        j.fp = 0.5 * c / w * ct;
        j.ftt = -w * ct;
        j.ftp = -0.5 * c / w * st;
        j.fpp = (-0.5 * s / w - 0.25 * c * c / (w * s)) * ct;
        return j;
    };
    // u = x t: alpha = 3, f = sqrt(sin phi) cos(phi) cos(theta); Delta u = 4y.
    const auto xtjet = [](double theta, double phi) {
        const double s = std::sin(phi), c = std::cos(phi);
        const double w = std::sqrt(s), ct = std::cos(theta), st = std::sin(theta);
        const double g = w * c;                       // sqrt(s) c
        const double gp = 0.5 * c * c / w - w * s;    // d/dphi
        const double gpp = -0.25 * c * c * c / (w * s) - 0.5 * c * w - 2.0 * w * c;
        AngularJet j;
        j.f = g * ct;
        j.ft = -g * st;
        j.fp = gp * ct;
        j.ftt = -g * ct;
        j.ftp = -gp * st;
        j.fpp = gpp * ct;
        return j;
    };
    auto rng = make_rng(26);
    std::uniform_real_distribution<double> urho(0.4, 1.6), uphi(0.2, kPi - 0.2),
        utheta(0.0, 2.0 * kPi);
    for (int k = 0; k < 500; ++k) {
        const PolarCoord c{urho(rng), uphi(rng), utheta(rng), false};
        const HPoint p = from_polar(c);
        CHECK(std::abs(sublaplacian_polar(1.0, xjet, c)) <= 1e-12);
        CHECK(sublaplacian_polar(3.0, xtjet, c) ==
              doctest::Approx(4.0 * p.y[0]).epsilon(1e-11));
    }
}

TEST_CASE("polar sublaplacian: random alpha against the Cartesian oracle") {
    auto rng = make_rng(27);
    std::uniform_real_distribution<double> ualpha(-2.5, 3.0), ucoef(-1.0, 1.0);
    std::uniform_real_distribution<double> urho(0.5, 1.5), uphi(0.3, kPi - 0.3),
        utheta(0.0, 2.0 * kPi);
    for (int rep = 0; rep < 12; ++rep) {
        const double alpha = ualpha(rng);
        const double c0 = ucoef(rng), c1 = ucoef(rng), c2 = ucoef(rng);
        const auto jet = [=](double phi) {
            const double c = std::cos(phi), s = std::sin(phi);
            return PhiJet{c0 + c1 * c + c2 * c * c, -(c1 + 2.0 * c2 * c) * s,
                          -(c1 + 2.0 * c2 * c) * c + 2.0 * c2 * s * s};
        };
        // Cartesian field rho^alpha f(phi) with the analytic horizontal gradient
        // assembled from the coordinate gradients.
        HField u;
        u.value = [=](const HPoint& p) {
            const PolarCoord pc = to_polar(p);
            return std::pow(pc.rho, alpha) * jet(pc.phi).f;
        };
        u.horizontal_gradient = [=](const HPoint& p) {
            const PolarCoord pc = to_polar(p);
            const PolarGradients g = polar_gradients(p);
            const double ra = std::pow(pc.rho, alpha);
            const PhiJet j = jet(pc.phi);
            const double cr = alpha * ra / pc.rho * j.f;
            const double cp = ra * j.fp;
            return std::vector<double>{cr * g.grad_rho[0] + cp * g.grad_phi[0],
                                       cr * g.grad_rho[1] + cp * g.grad_phi[1]};
        };
        for (int k = 0; k < 40; ++k) {
            const PolarCoord c{urho(rng), uphi(rng), utheta(rng), false};
            const double polar = sublaplacian_polar(alpha, jet, c);
            const double cart = sublaplacian(u, from_polar(c));
            const double scale = std::max(1.0, std::abs(polar));
            CHECK(std::abs(polar - cart) <= 1e-8 * scale);
        }
    }
}

TEST_CASE("coordinate sublaplacians and homogeneity") {
    auto rng = make_rng(28);
    for (int k = 0; k < 5000; ++k) {
        const HPoint p = random_off_axis(rng);
        const double s2 = p.x[0] * p.x[0] + p.y[0] * p.y[0];
        const double rho = gauge_norm(p);
        const PolarLaplacians l = polar_laplacians(p);
        CHECK(l.lap_rho == doctest::Approx(3.0 * s2 / std::pow(rho, 3.0)).epsilon(1e-10));
        CHECK(std::abs(l.lap_phi - 4.0 * (p.t / (rho * rho)) / (rho * rho)) <=
              1e-10 / (rho * rho));
        CHECK(std::abs(l.lap_theta) <= 1e-10 / s2);
    }

    // u = rho^alpha f(phi) scales exactly under dilations.
    std::uniform_real_distribution<double> ul(0.3, 2.5);
    for (int k = 0; k < 300; ++k) {
        const HPoint p = random_off_axis(rng);
        const double lam = ul(rng);
        const PolarCoord c = to_polar(p);
        const PolarCoord cd = to_polar(dilate(lam, p));
        const double alpha = 1.3;
        const double u = std::pow(c.rho, alpha) * std::cos(c.phi);
        const double ud = std::pow(cd.rho, alpha) * std::cos(cd.phi);
        CHECK(ud == doctest::Approx(std::pow(lam, alpha) * u).epsilon(1e-12));
    }
}
