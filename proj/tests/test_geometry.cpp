#include "doctest.h"

#include <cmath>

#include "qrlab/geometry.hpp"
#include "qrlab/numerics.hpp"
#include "qrlab/rng.hpp"

using namespace qrlab;

TEST_SUITE_BEGIN("geometry");

TEST_CASE("chart swap exchanges 0 and inf and is an involution") {
    CHECK(chart_swap(ExtPoint::zero(3)).is_inf());
    CHECK(chart_swap(ExtPoint::infinity(3)) == ExtPoint::zero(3));

    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const ExtPoint x = rng.in_ball(3, 5.0);
        if (x.norm() < 1e-6) continue;
        const ExtPoint back = chart_swap(chart_swap(x));
        CHECK(euclid_dist(x, back) < 1e-12 * (1.0 + x.norm()));
    }
}

TEST_CASE("stereographic lift lands on the unit sphere and round-trips") {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + (i % 3);
        const ExtPoint x = rng.in_ball(n, 20.0);
        const auto X = stereo_lift(x);
        double s = 0.0;
        for (int k = 0; k <= n; ++k) s += X[k] * X[k];
        CHECK(std::abs(s - 1.0) < 1e-12);
        const ExtPoint back = stereo_project(X, n);
        CHECK(euclid_dist(x, back) < 1e-10 * (1.0 + x.norm()));
    }
    const auto north = stereo_lift(ExtPoint::infinity(2));
    CHECK(north[2] == 1.0);
    CHECK(stereo_project(north, 2).is_inf());
}

TEST_CASE("norm is overflow-safe") {
    ExtPoint big{1e300, 1e300};
    CHECK(std::isfinite(big.norm()));
    CHECK(big.norm() == doctest::Approx(std::sqrt(2.0) * 1e300));
}

TEST_CASE("splitmix stream is deterministic and uniform-ish") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng c(7);
    double mean = 0.0;
    const int N = 20000;
    for (int i = 0; i < N; ++i) mean += c.next_double();
    mean /= N;
    CHECK(std::abs(mean - 0.5) < 0.01);
}

TEST_CASE("small matrix determinant and singular values") {
    SmallMat d = SmallMat::diag({3.0, -2.0, 0.5});
    CHECK(d.det() == doctest::Approx(-3.0));
    const auto sv = d.singular_values();
    CHECK(sv[0] == doctest::Approx(3.0));
    CHECK(sv[1] == doctest::Approx(2.0));
    CHECK(sv[2] == doctest::Approx(0.5));

    // Rotation by 30 degrees has unit singular values and det 1.
    SmallMat r;
    r.n = 2;
    const double c = std::cos(M_PI / 6), s = std::sin(M_PI / 6);
    r.at(0, 0) = c; r.at(0, 1) = -s;
    r.at(1, 0) = s; r.at(1, 1) = c;
    CHECK(r.det() == doctest::Approx(1.0));
    const auto rv = r.singular_values();
    CHECK(rv[0] == doctest::Approx(1.0));
    CHECK(rv[1] == doctest::Approx(1.0));
}

TEST_CASE("simpson integrates smooth functions accurately") {
    const double v = simpson([](double t) { return 1.0 / t; }, 1.0, 2.0, 256);
    CHECK(std::abs(v - std::log(2.0)) < 1e-10);
}

TEST_CASE("sphere surface measure") {
    CHECK(sphere_surface_measure(1) == doctest::Approx(2.0 * M_PI));
    CHECK(sphere_surface_measure(2) == doctest::Approx(4.0 * M_PI));
    CHECK(sphere_surface_measure(3) == doctest::Approx(2.0 * M_PI * M_PI));
}

TEST_SUITE_END();
