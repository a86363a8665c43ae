#include "doctest.h"

#include <cmath>

#include "qrlab/holder.hpp"
#include "qrlab/rng.hpp"

using namespace qrlab;

TEST_SUITE_BEGIN("holder");

TEST_CASE("holder constant of the identity is 1") {
    const auto euc = ConformalMetric::euclidean(3);
    const auto fit = holder_constant(identity_map(3), euc, euc,
                                     {ExtPoint::zero(3), 1.0}, 1.0, 2000, 7);
    CHECK(fit.L_hat == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fit.exponent_hat == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(fit.pair_count == 2000);
}

TEST_CASE("radial power: ratio 1 through the origin, 2^(1-t) at antipodes") {
    const double t = 0.5;
    const auto f = radial_power(t, 3);
    const auto euc = ConformalMetric::euclidean(3);

    // Pairs through 0 give |f(y)| / |y|^t = 1 exactly.
    const auto through = holder_constant(f, euc, euc, {ExtPoint::zero(3), 1.0}, t, 4000, 11,
                                         /*pairs_through_center=*/true);
    CHECK(through.L_hat == doctest::Approx(1.0).epsilon(1e-3));

    // General pairs can do better: antipodal pairs reach 2 a^t / (2a)^t.
    const auto general = holder_constant(f, euc, euc, {ExtPoint::zero(3), 1.0}, t, 20000, 11);
    CHECK(general.L_hat >= 1.0);
    CHECK(general.L_hat <= std::pow(2.0, 1.0 - t) + 1e-9);
    CHECK(general.L_hat == doctest::Approx(std::pow(2.0, 1.0 - t)).epsilon(0.02));
}

TEST_CASE("holder sup never decreases when the pair sample grows") {
    const auto f = radial_power(0.5, 3);
    const auto euc = ConformalMetric::euclidean(3);
    double prev = 0.0;
    for (int pairs : {500, 2000, 8000}) {
        const auto fit = holder_constant(f, euc, euc, {ExtPoint::zero(3), 1.0}, 0.5, pairs, 3);
        CHECK(fit.L_hat >= prev);
        prev = fit.L_hat;
    }
}

TEST_CASE("zorich bloch restricted to |x| <= 0.5 has a finite constant") {
    const auto f = zorich_bloch();
    const auto hyp = ConformalMetric::hyperbolic_ball(3);
    const auto euc = ConformalMetric::euclidean(3);
    const double alpha = f.holder_exponent();
    const auto fit = holder_constant(f, hyp, euc, {ExtPoint::zero(3), 0.5}, alpha, 4000, 5);
    CHECK(fit.L_hat > 0.0);
    CHECK(std::isfinite(fit.L_hat));

    // Improving the exponent downward keeps the constant finite.
    for (double a2 : {alpha / 2.0, 0.75 * alpha}) {
        const auto fit2 = holder_constant(f, hyp, euc, {ExtPoint::zero(3), 0.5}, a2, 4000, 5);
        CHECK(std::isfinite(fit2.L_hat));
        CHECK(fit2.L_hat > 0.0);
    }
}

TEST_CASE("region touching the boundary is rejected") {
    const auto f = zorich_bloch();
    const auto hyp = ConformalMetric::hyperbolic_ball(3);
    const auto euc = ConformalMetric::euclidean(3);
    CHECK_THROWS_AS(holder_constant(f, hyp, euc, {ExtPoint::zero(3), 1.0}, 0.5, 100, 1),
                    std::domain_error);
}

TEST_CASE("local holder exponent recovers the radial-power exponent at 0") {
    const auto euc = ConformalMetric::euclidean(3);
    std::vector<double> scales;
    for (int k = 1; k <= 8; ++k) scales.push_back(std::pow(10.0, -k * 0.75));

    for (double t : {0.3, 0.5, 0.8}) {
        const auto fit = local_holder_exponent(radial_power(t, 3), euc, euc,
                                               ExtPoint::zero(3), scales, 16, 21);
        CHECK(std::abs(fit.exponent_hat - t) < 0.02);
        // Matches alpha = K^{1/(1-n)} with K = t^{1-n}.
        CHECK(radial_power(t, 3).holder_exponent() == doctest::Approx(t).epsilon(1e-12));
    }

    const auto id = local_holder_exponent(identity_map(3), euc, euc, ExtPoint::zero(3),
                                          scales, 16, 21);
    CHECK(std::abs(id.exponent_hat - 1.0) < 0.01);
}

TEST_CASE("constant maps are flagged degenerate") {
    const auto euc = ConformalMetric::euclidean(2);
    std::vector<double> scales{1e-1, 1e-2, 1e-3};
    const auto fit = local_holder_exponent(constant_map(ExtPoint{1.0, 2.0}), euc, euc,
                                           ExtPoint::zero(2), scales, 8, 9);
    CHECK(fit.degenerate);
}

TEST_CASE("q estimate") {
    const auto euc = ConformalMetric::euclidean(2);
    const auto sph = ConformalMetric::spherical(2);
    std::vector<double> scales{1e-2, 1e-3, 1e-4};

    CHECK(q_estimate(constant_map(ExtPoint{0.5, 0.5}), euc, euc, ExtPoint::zero(2), 1.0,
                     scales, 16, 3) == 0.0);
    CHECK(q_estimate(identity_map(2), euc, euc, ExtPoint{0.2, -0.1}, 1.0, scales, 16, 3) ==
          doctest::Approx(1.0).epsilon(1e-3));

    // exp(exp(z)) with alpha = 1/2: oscillation ratios decay toward 0 as the
    // scale shrinks, uniformly over a grid on |Re z| <= 3.
    const auto g = planar_exp_exp();
    std::vector<double> per_scale;
    for (double s : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
        double worst = 0.0;
        for (int ix = -3; ix <= 3; ++ix)
            for (int iy = -3; iy <= 3; ++iy) {
                const ExtPoint x{static_cast<double>(ix), static_cast<double>(iy)};
                worst = std::max(worst, q_estimate(g, euc, sph, x, 0.5, {s}, 12, 17));
            }
        per_scale.push_back(worst);
    }
    for (size_t i = 1; i < per_scale.size(); ++i) CHECK(per_scale[i] <= per_scale[i - 1] * 1.05);
    CHECK(per_scale.back() < 0.05 * per_scale.front());
}

TEST_SUITE_END();
