#include "doctest.h"

#include <cmath>

#include "qrlab/growth.hpp"
#include "qrlab/julia.hpp"
#include "qrlab/parallel.hpp"

using namespace qrlab;

TEST_SUITE_BEGIN("parallel");

TEST_CASE("blocked reductions are independent of the thread count") {
    const auto f = [](std::int64_t i) { return std::sin(0.001 * i) / (1.0 + i); };
    const std::int64_t N = 100000;

    const double serial = blocked_sum_serial(N, f);
    for (int threads : {1, 2, 4}) {
        set_thread_count(threads);
        CHECK(blocked_sum(N, f) == serial);  // bitwise, fixed-block scheme
        CHECK(blocked_max(N, f) == max_serial(N, f));
    }
    set_thread_count(0);
}

TEST_CASE("julia grid kernel matches its serial reference for any thread count") {
    const auto f = planar_polynomial({{0, 0}, {0, 0}, {1, 0}});
    JuliaGridConfig cfg;
    cfg.width = cfg.height = 24;
    cfg.r_list = {0.5, 0.25, 0.125};
    cfg.m_list = {1, 2, 4, 8};
    cfg.samples = 8;
    cfg.seed = 5;
    cfg.width = 24;
    cfg.height = 32;

    const auto ref = julia_grid_serial(f, cfg);
    for (int threads : {1, 2, 4}) {
        set_thread_count(threads);
        const auto par = julia_grid(f, cfg);
        for (size_t i = 0; i < ref.indicator.size(); ++i) {
            CHECK(par.indicator[i] == ref.indicator[i]);
            CHECK(par.is_julia[i] == ref.is_julia[i]);
        }
    }
    set_thread_count(0);
}

TEST_CASE("Monte Carlo averages match the serial reference") {
    const auto f = radial_power(2.0, 2);
    const std::vector<double> radii{0.5, 1.0, 2.0};
    const auto serial = spherical_average_serial(f, ExtPoint::zero(2), radii, 20000, 77);
    for (int threads : {1, 2}) {
        set_thread_count(threads);
        const auto series = growth_suite(f, ExtPoint::zero(2), radii, 16, 20000, 77);
        for (size_t j = 0; j < radii.size(); ++j)
            CHECK(series.A[j] == doctest::Approx(serial[j]).epsilon(1e-12));
    }
    set_thread_count(0);
}

TEST_SUITE_END();
