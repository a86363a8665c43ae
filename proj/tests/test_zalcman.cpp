#include "doctest.h"

#include <cmath>

#include "qrlab/zalcman.hpp"

using namespace qrlab;

TEST_SUITE_BEGIN("zalcman");

TEST_CASE("exp(exp(z)) rescales to a nonconstant limit candidate") {
    const auto g = planar_exp_exp();
    ZalcmanRefinement refine;
    refine.windows = 6;
    const auto seq = zalcman_rescale(g, 0.5, 1.0, refine, 101);

    REQUIRE_FALSE(seq.yosida_evidence);
    REQUIRE_FALSE(seq.steps.empty());
    CHECK(seq.max_weighted_ratio > 1e3);

    double prev_rho = std::numeric_limits<double>::infinity();
    for (const auto& step : seq.steps) {
        // Scale law: rho^alpha sigma(f(x), f(y)) = |x - y|^alpha.
        const double sep = euclid_dist(step.x_m, step.y_m);
        const double lhs = std::pow(step.rho_m, seq.alpha) * step.sigma_fxfy;
        const double rhs = std::pow(sep, seq.alpha);
        CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, rhs));

        CHECK(step.rho_m > 0.0);
        CHECK(step.rho_m < prev_rho);
        prev_rho = step.rho_m;

        CHECK(step.nonconstant);
        CHECK(step.cert_sep >= 0.1);
    }

    // The final (smallest-scale) candidate obeys the 2 t^alpha envelope.
    const auto& last = seq.steps.back();
    const double excess = rescaled_holder_excess(g, last, seq.alpha, 1000, 2.0, 55);
    CHECK(excess <= 1e-3);
}

TEST_CASE("zorich translates give Yosida evidence") {
    const auto Z = zorich();
    ZalcmanRefinement refine;
    refine.windows = 5;
    refine.stage1_samples = 3000;
    const auto seq = zalcman_rescale(Z, Z.holder_exponent(), 1.0, refine, 103);
    CHECK(seq.yosida_evidence);
    CHECK(seq.steps.empty());
    CHECK(seq.max_weighted_ratio < 100.0);
}

TEST_CASE("e^z gives Yosida evidence: its spherical derivative is bounded") {
    // sup 2|e^z| / (1 + |e^z|^2) = 1, so the translate family is
    // equicontinuous and the weighted ratio never grows.
    const auto f = planar_exp();
    ZalcmanRefinement refine;
    refine.windows = 8;
    refine.stage1_samples = 3000;
    const auto seq = zalcman_rescale(f, 1.0, 1.0, refine, 107);
    CHECK(seq.yosida_evidence);
    CHECK(seq.steps.empty());
    CHECK(seq.max_weighted_ratio < 10.0);
    CHECK(seq.max_weighted_ratio > 0.1);
}

TEST_SUITE_END();
