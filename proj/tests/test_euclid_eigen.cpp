#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "acfh/euclid_eigen.hpp"
#include "acfh/quadrature.hpp"
#include "acfh/sturm_liouville.hpp"
#include "support/oracles.hpp"

using namespace acfh;

TEST_CASE("hemisphere eigenvalues are classical") {
    const EigenSolution s3 = cap_eigenvalue({kPi / 2.0, 3}, 1024);
    CHECK(s3.lambda == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(s3.alpha == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::isfinite(s3.est_error));
    CHECK(s3.mesh_size == 2048);

    // Eigenfunction is cos(phi) up to normalization (max-normalized here).
    double worst = 0.0;
    for (std::size_t i = 0; i < s3.phi.size(); i += 37) {
        worst = std::max(worst, std::abs(s3.eigenfunction[i] -
                                         std::cos(s3.phi[i]) / std::cos(s3.phi[0])));
        CHECK(s3.eigenfunction[i] > 0.0);
    }
    CHECK(worst <= 1e-5);

    const EigenSolution s4 = cap_eigenvalue({kPi / 2.0, 4}, 1024);
    CHECK(s4.lambda == doctest::Approx(3.0).epsilon(1e-9));

    CHECK_THROWS_AS(cap_eigenvalue({kPi / 2.0, 3}, 8), std::invalid_argument);
    CHECK_THROWS_AS(cap_eigenvalue({0.0, 3}, 64), std::invalid_argument);
    CHECK_THROWS_AS(cap_eigenvalue({1.0, 2}, 64), std::invalid_argument);
}

TEST_CASE("pi/3 cap against the shooting oracle") {
    const EigenSolution s = cap_eigenvalue({kPi / 3.0, 3}, 1024);
    const double shot = shoot_smallest_mu(1.0, 0.0, kPi / 3.0, true, 20000);
    CHECK(s.lambda == doctest::Approx(shot).epsilon(1e-6));
    CHECK(shot == doctest::Approx(oracles::frozen::lambda_e_cap_pi3_n3).epsilon(1e-11));
    CHECK(s.alpha == doctest::Approx(oracles::frozen::alpha_e_pi3).epsilon(1e-8));
}

TEST_CASE("richardson estimate converges at second order") {
    const double l256 = sl_fv_smallest({0.0, kPi / 2.0,
                                        [](double p) { return std::sin(p); }, 1.0, false, true},
                                       256)
                            .lambda;
    const double l512 = sl_fv_smallest({0.0, kPi / 2.0,
                                        [](double p) { return std::sin(p); }, 1.0, false, true},
                                       512)
                            .lambda;
    const double l1024 = sl_fv_smallest({0.0, kPi / 2.0,
                                         [](double p) { return std::sin(p); }, 1.0, false, true},
                                        1024)
                             .lambda;
    const double order = std::log2(std::abs(l256 - 2.0) / std::abs(l512 - 2.0));
    CHECK(order >= 1.5);
    CHECK(std::abs(l1024 - 2.0) < std::abs(l512 - 2.0));
}

TEST_CASE("characteristic constant") {
    CHECK(characteristic_constant(2.0, 3) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(characteristic_constant(0.0, 3) == 0.0);
    CHECK(characteristic_constant(0.0, 7) == 0.0);
    CHECK(characteristic_constant(8.0, 4) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS(characteristic_constant(-1.0, 3), std::invalid_argument);
}

TEST_CASE("beta weight") {
    CHECK(beta_weight(2.0, 3) == doctest::Approx(0.5).epsilon(1e-14));
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ul(-3.0, 6.0);
    for (int k = 0; k < 100; ++k) {
        const double lambda = std::pow(10.0, ul(rng));
        const int n = 3 + static_cast<int>(rng() % 4);
        const double alpha = characteristic_constant(lambda, n);
        CHECK(std::sqrt(beta_weight(lambda, n) * lambda) ==
              doctest::Approx(alpha).epsilon(1e-12));
        CHECK(beta_weight(lambda, n) > 0.0);
        CHECK(beta_weight(lambda, n) < 1.0);
    }
    // beta -> 1 monotonically as lambda grows.
    const double b1 = beta_weight(10.0, 3), b2 = beta_weight(1e3, 3), b3 = beta_weight(1e6, 3);
    CHECK(b1 < b2);
    CHECK(b2 < b3);
    CHECK(b3 < 1.0);
    CHECK(b3 > 0.99);
    CHECK_THROWS_AS(beta_weight(0.0, 3), std::invalid_argument);
}

TEST_CASE("psi profile") {
    CHECK(psi(0.25) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(psi(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(psi(1.0 / (4.0 * std::exp(1.0))) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS(psi(0.0), std::invalid_argument);
    CHECK_THROWS_AS(psi(1.0), std::invalid_argument);

    // Convex, decreasing; both one-sided slopes at 1/4 equal -2.
    double prev = psi(1e-3), prev_d = 0.0;
    bool first = true;
    for (int i = 1; i <= 1000; ++i) {
        const double s = i / 1001.0;
        const double v = psi(s);
        if (s > 1e-3) {
            const double d = v - prev;
            CHECK(d <= 0.0);
            if (!first) CHECK(d - prev_d >= -1e-10);
            prev_d = d;
            first = false;
            prev = v;
        }
    }
    const double h = 1e-7;
    CHECK((psi(0.25 + h) - psi(0.25)) / h == doctest::Approx(-2.0).epsilon(1e-6));
    CHECK((psi(0.25) - psi(0.25 - h)) / h == doctest::Approx(-2.0).epsilon(1e-6));
}

TEST_CASE("cap sum bound") {
    CHECK(cap_sum_bound(0.5, 0.5) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(cap_sum_bound(0.25, 0.25) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(cap_sum_bound(0.1, 0.4) ==
          doctest::Approx(oracles::frozen::psi_01_plus_04).epsilon(1e-14));
    CHECK_THROWS_AS(cap_sum_bound(0.7, 0.4), std::invalid_argument);
    CHECK_THROWS_AS(cap_sum_bound(0.0, 0.4), std::invalid_argument);

    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> u(1e-6, 1.0);
    for (int k = 0; k < 1000; ++k) {
        const double s1 = u(rng);
        const double s2 = u(rng) * (1.0 - s1);
        if (s2 <= 0.0) continue;
        CHECK(cap_sum_bound(s1, s2) >= 2.0 - 1e-12);
    }
}

TEST_CASE("characteristic constant is decreasing in the cap angle") {
    double prev = 1e300;
    for (int i = 1; i <= 20; ++i) {
        const double phi0 = i * kPi / 21.0;
        const double alpha = cap_eigenvalue({phi0, 3}, 256).alpha;
        CHECK(alpha < prev);
        prev = alpha;
    }
}

TEST_CASE("cap characteristic constant is decreasing in n at fixed area fraction") {
    // The eigenvalue itself grows with n; the monotone quantity is alpha(s, n).
    const double s = 0.25;
    double prev_alpha = 1e300;
    for (const int n : {3, 4, 5}) {
        const EigenSolution sol = cap_eigenvalue({cap_half_angle(s, n), n}, 1024);
        CHECK(sol.alpha < prev_alpha);
        prev_alpha = sol.alpha;
    }
    CHECK(cap_half_angle(s, 3) == doctest::Approx(kPi / 3.0).epsilon(1e-12));
    CHECK(cap_area_fraction(cap_half_angle(s, 4), 4) == doctest::Approx(s).epsilon(1e-10));
    CHECK(cap_area_fraction(cap_half_angle(s, 5), 5) == doctest::Approx(s).epsilon(1e-10));
}

TEST_CASE("cap constant dominates the psi profile (n = 3)") {
    for (int i = 1; i <= 19; ++i) {
        const double s = 0.05 * i;
        const double phi0 = cap_half_angle(s, 3);
        const double alpha = cap_eigenvalue({phi0, 3}, 1024).alpha;
        CHECK(alpha >= psi(s) - 1e-6);
    }
}

TEST_CASE("eigen solution invariant") {
    for (const double phi0 : {0.6, 1.2, 2.2}) {
        const EigenSolution s = cap_eigenvalue({phi0, 4}, 256);
        CHECK(std::abs(s.alpha * s.alpha + 2.0 * s.alpha - s.lambda) <=
              1e-10 * std::max(1.0, s.lambda));
    }
}
