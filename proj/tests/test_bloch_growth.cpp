#include "doctest.h"

#include <cmath>

#include "qrlab/bloch.hpp"
#include "qrlab/growth.hpp"

using namespace qrlab;

TEST_SUITE_BEGIN("bloch_growth");

TEST_CASE("R_hat of the zero map vanishes") {
    const auto stats = bloch_R(constant_map(ExtPoint::zero(3)), 16, {0.5, 0.9}, 8, 5);
    CHECK(stats.R_hat == 0.0);
}

TEST_CASE("zorich bloch little-Bloch curve stays above log 2 on the axis tail") {
    const auto f = zorich_bloch();
    const std::vector<double> levels{0.99, 0.999, 0.9999};
    const auto stats = bloch_R(f, 64, levels, 16, 5);
    REQUIRE(stats.little_bloch_curve.size() == levels.size());
    for (const auto& p : stats.little_bloch_curve) {
        CHECK(p.diam >= 0.9 * std::log(2.0));
        CHECK(std::isfinite(p.diam));
    }
    CHECK(stats.R_hat >= stats.sup_diam);
    CHECK(stats.R_hat < 10.0);  // image sits inside the bounded beam
}

TEST_CASE("mobius to half-space has unbounded ball diameters near the boundary") {
    const auto f = mobius_ball_to_half_space(3);
    const auto shallow = bloch_R(f, 32, {0.5}, 16, 5);
    const auto deep = bloch_R(f, 32, {0.999}, 16, 5);
    CHECK(deep.R_hat > 5.0 * shallow.R_hat);
    CHECK(deep.bloch_radius_probe > shallow.bloch_radius_probe);
}

TEST_CASE("bloch growth bound") {
    SUBCASE("zorich bloch passes with 5% slack") {
        const auto f = zorich_bloch();
        const auto stats = bloch_R(f, 128, {0.5, 0.9, 0.99, 0.999}, 24, 5);
        const auto rows = bloch_growth_check(f, {0.9, 0.99, 0.999}, stats, 512, 5);
        for (const auto& row : rows) {
            CHECK(row.pass);
            CHECK(row.M > 0.0);
            CHECK(row.bound >= stats.R_hat);
        }
    }
    SUBCASE("constant zero map: zero bound, zero modulus") {
        const auto f = constant_map(ExtPoint::zero(3));
        const auto stats = bloch_R(f, 8, {0.5}, 8, 5);
        const auto rows = bloch_growth_check(f, {0.9}, stats, 64, 5);
        CHECK(rows[0].M == 0.0);
        CHECK(rows[0].bound == 0.0);
        CHECK(rows[0].pass);
    }
    SUBCASE("identity on the ball passes") {
        const auto f = identity_map(3);
        const auto stats = bloch_R(f, 32, {0.5, 0.9}, 16, 5);
        const auto rows = bloch_growth_check(f, {0.9, 0.99}, stats, 128, 5);
        for (const auto& row : rows) {
            CHECK(row.M == doctest::Approx(row.r));
            CHECK(row.pass);
        }
    }
}

TEST_CASE("spherical average of the identity covers half the sphere") {
    const auto series = growth_suite(identity_map(2), ExtPoint::zero(2), {0.5, 1.0}, 64,
                                     200000, 7);
    CHECK(series.omega_n == doctest::Approx(4.0 * M_PI));
    const double a1 = series.A.back();
    CHECK(std::abs(a1 - 0.5) <= 3.0 * series.A_stderr.back());
    CHECK(std::abs(a1 - 0.5) < 0.005);
    // Nested estimates are nondecreasing in r.
    CHECK(series.A.front() <= series.A.back());
    CHECK(series.A.front() == doctest::Approx(1.0 / (1.0 + 0.5 * 0.5) / 2.0).epsilon(0.02));
}

TEST_CASE("growth orders of the zoo") {
    SUBCASE("zorich has order n - 1 = 2") {
        const auto series = growth_suite(zorich(), ExtPoint::zero(3), {16, 32, 64, 128, 256},
                                         256, 2000, 7);
        CHECK(std::abs(series.mu_hat - 2.0) <= 0.1);
        CHECK(std::abs(series.lambda_hat - 2.0) <= 0.1);
    }
    SUBCASE("e^z has order 1") {
        const auto series = growth_suite(planar_exp(), ExtPoint::zero(2), {16, 32, 64, 128, 256},
                                         256, 2000, 7);
        CHECK(std::abs(series.mu_hat - 1.0) <= 0.05);
    }
    SUBCASE("radial powers have order 0") {
        std::vector<double> radii;
        for (int k = 0; k <= 6; ++k) radii.push_back(std::pow(10.0, 60 + 10 * k));
        const auto series = growth_suite(radial_power(0.5, 3), ExtPoint::zero(3), radii, 64,
                                         500, 7);
        CHECK(series.mu_hat <= 0.05);
        CHECK(series.mu_hat >= 0.0);
    }
}

TEST_CASE("monotone A for nested Monte Carlo samples") {
    const auto series = growth_suite(radial_power(2.0, 2), ExtPoint::zero(2),
                                     {0.5, 1.0, 2.0, 4.0}, 32, 20000, 13);
    for (size_t i = 1; i < series.A.size(); ++i) CHECK(series.A[i] >= series.A[i - 1]);
    for (double se : series.A_stderr) CHECK(se >= 0.0);
}

TEST_SUITE_END();
