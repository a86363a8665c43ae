#include "doctest.h"

#include <cmath>

#include "qrlab/metrics.hpp"
#include "qrlab/numerics.hpp"
#include "qrlab/rng.hpp"

using namespace qrlab;

namespace {

// Oracle: Simpson quadrature of the chart density 2/(1+|x|^2) along the
// projected great-circle path between u and v, independent of the closed
// form under test. Path parametrized by slerp of the lifted points.
double sigma_quadrature(const ExtPoint& u, const ExtPoint& v, int panels) {
    const int n = u.dim();
    const auto U = stereo_lift(u), V = stereo_lift(v);
    double c = 0.0;
    for (int i = 0; i <= n; ++i) c += U[i] * V[i];
    c = std::clamp(c, -1.0, 1.0);
    const double theta = std::acos(c);
    const auto chart_point = [&](double t) {
        std::array<double, kMaxDim + 1> G{};
        const double s = std::sin(theta);
        for (int i = 0; i <= n; ++i)
            G[i] = (std::sin((1.0 - t) * theta) * U[i] + std::sin(t * theta) * V[i]) / s;
        return stereo_project(G, n);
    };
    const double dt = 1e-6;
    const auto f = [&](double t) {
        const ExtPoint x = chart_point(t);
        const ExtPoint xp = chart_point(t + dt), xm = chart_point(t - dt);
        const double speed = euclid_dist(xp, xm) / (2.0 * dt);
        return 2.0 / (1.0 + x.norm_sq()) * speed;
    };
    return simpson(f, dt, 1.0 - dt, panels) + 2.0 * dt * theta;  // endpoint slivers ~ dt * speed
}

SmallMat random_orthogonal(int n, Rng& rng) {
    // Gram-Schmidt on a Gaussian matrix.
    SmallMat q;
    q.n = n;
    for (int col = 0; col < n; ++col) {
        ExtPoint v(n);
        for (int i = 0; i < n; ++i) v[i] = rng.gaussian();
        for (int prev = 0; prev < col; ++prev) {
            double d = 0.0;
            for (int i = 0; i < n; ++i) d += q.at(i, prev) * v[i];
            for (int i = 0; i < n; ++i) v[i] -= d * q.at(i, prev);
        }
        const double m = v.norm();
        for (int i = 0; i < n; ++i) q.at(i, col) = v[i] / m;
    }
    return q;
}

}  // namespace

TEST_SUITE_BEGIN("metrics");

TEST_CASE("densities at reference points") {
    const auto euc = ConformalMetric::euclidean(3);
    const auto sph = ConformalMetric::spherical(3);
    const auto hyp = ConformalMetric::hyperbolic_ball(3);
    CHECK(euc.density(ExtPoint{0.3, -0.2, 0.9}) == 1.0);
    CHECK(sph.density(ExtPoint::zero(3)) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(hyp.density(ExtPoint::zero(3)) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(sph.density(ExtPoint::infinity(3)) == doctest::Approx(2.0));  // swapped chart

    const auto qh = ConformalMetric::quasihyperbolic(Region::unit_ball(2));
    CHECK(qh.density(ExtPoint{0.5, 0.0}) == doctest::Approx(2.0));
    CHECK_THROWS_AS(qh.density(ExtPoint{1.5, 0.0}), std::domain_error);
    CHECK_THROWS_AS(hyp.density(ExtPoint{1.0, 0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(euc.density(ExtPoint::infinity(3)), std::domain_error);
}

TEST_CASE("spherical distance: antipodal and quarter-circle values") {
    CHECK(dist_spherical(ExtPoint::zero(3), ExtPoint::infinity(3)) == doctest::Approx(M_PI));
    // 2 * integral_0^1 dt/(1+t^2) = pi/2 along the radial segment.
    const double oracle =
        2.0 * simpson([](double t) { return 1.0 / (1.0 + t * t); }, 0.0, 1.0, 128);
    CHECK(oracle == doctest::Approx(M_PI / 2).epsilon(1e-10));
    CHECK(dist_spherical(ExtPoint::zero(2), ExtPoint{1.0, 0.0}) ==
          doctest::Approx(M_PI / 2).epsilon(1e-14));
}

TEST_CASE("spherical closed form matches great-circle quadrature") {
    Rng rng(2024);
    int checked = 0;
    while (checked < 1000) {
        const int n = 2 + (checked % 2);
        const ExtPoint u = rng.in_ball(n, 1.5), v = rng.in_ball(n, 1.5);
        const double sigma = dist_spherical(u, v);
        if (sigma > 2.7 || sigma < 1e-3) continue;  // keep the path away from the pole
        const double quad = sigma_quadrature(u, v, 512);
        CHECK(std::abs(sigma - quad) < 1e-6);
        ++checked;
    }
}

TEST_CASE("bi-Lipschitz sandwich on the closed unit ball") {
    Rng rng(31337);
    for (int i = 0; i < 10000; ++i) {
        const int n = 2 + (i % 3);
        ExtPoint u = rng.unit_vector(n) * std::pow(rng.next_double(), 1.0 / n);
        ExtPoint v = rng.unit_vector(n) * std::pow(rng.next_double(), 1.0 / n);
        const double e = euclid_dist(u, v);
        const double s = dist_spherical(u, v);
        CHECK(s - e >= -1e-12);
        CHECK(2.0 * e - s >= -1e-12);
    }
}

TEST_CASE("hyperbolic distance closed form") {
    const ExtPoint x{0.3, -0.4, 0.1};
    CHECK(dist_hyperbolic(x, x) == 0.0);
    CHECK(dist_hyperbolic(ExtPoint::zero(3), ExtPoint{0.5, 0.0, 0.0}) ==
          doctest::Approx(std::log(3.0)).epsilon(1e-14));

    // rho(0, r e) = log((1+r)/(1-r)) for random directions.
    Rng rng(5);
    for (int i = 0; i < 500; ++i) {
        const int n = 2 + (i % 3);
        const double r = rng.uniform(1e-6, 0.999);
        const ExtPoint p = rng.unit_vector(n) * r;
        const double expected = std::log((1.0 + r) / (1.0 - r));
        CHECK(std::abs(dist_hyperbolic(ExtPoint::zero(n), p) - expected) <
              1e-12 * std::max(1.0, expected));
    }

    // The log-2 pair family on the axis.
    for (double r : {0.5, 0.9, 0.99, 0.999}) {
        const ExtPoint a{0.0, 0.0, -r};
        const ExtPoint b{0.0, 0.0, -(3.0 * r + 1.0) / (r + 3.0)};
        CHECK(dist_hyperbolic(a, b) == doctest::Approx(std::log(2.0)).epsilon(1e-9));
    }

    CHECK_THROWS_AS(dist_hyperbolic(ExtPoint::zero(2), ExtPoint{1.0, 0.0}), std::domain_error);
}

TEST_CASE("symmetry and triangle inequality on seeded triples") {
    Rng rng(99);
    const auto euc = ConformalMetric::euclidean(3);
    const auto sph = ConformalMetric::spherical(3);
    const auto hyp = ConformalMetric::hyperbolic_ball(3);
    for (int i = 0; i < 10000; ++i) {
        const ExtPoint a = rng.in_ball(3, 0.95), b = rng.in_ball(3, 0.95), c = rng.in_ball(3, 0.95);
        for (const auto* m : {&euc, &sph, &hyp}) {
            const double ab = m->distance(a, b), ba = m->distance(b, a);
            const double bc = m->distance(b, c), ac = m->distance(a, c);
            const double scale = std::max({ab, bc, ac, 1e-30});
            CHECK(std::abs(ab - ba) <= 1e-9 * scale);
            CHECK(ac <= ab + bc + 1e-9 * scale);
        }
    }
    // Spherical triples may roam the whole chart.
    for (int i = 0; i < 10000; ++i) {
        const ExtPoint a = rng.in_ball(3, 50.0), b = rng.in_ball(3, 50.0), c = rng.in_ball(3, 50.0);
        const double ab = sph.distance(a, b), bc = sph.distance(b, c), ac = sph.distance(a, c);
        CHECK(ac <= ab + bc + 1e-9);
    }
}

TEST_CASE("rotation invariance of the closed-form distances") {
    Rng rng(123);
    for (int i = 0; i < 500; ++i) {
        const int n = 2 + (i % 3);
        const SmallMat R = random_orthogonal(n, rng);
        const ExtPoint u = rng.in_ball(n, 3.0), v = rng.in_ball(n, 3.0);
        CHECK(std::abs(dist_spherical(R.apply(u), R.apply(v)) - dist_spherical(u, v)) < 1e-12);
        const ExtPoint x = rng.in_ball(n, 0.99), y = rng.in_ball(n, 0.99);
        CHECK(std::abs(dist_hyperbolic(R.apply(x), R.apply(y)) - dist_hyperbolic(x, y)) < 1e-9);
    }
}

TEST_CASE("metric sphere sampling hits the requested radius") {
    const std::uint64_t seed = 777;

    const auto euc = ConformalMetric::euclidean(3);
    for (const auto& y : euc.sphere_sample(ExtPoint::zero(3), 1.0, 32, seed))
        CHECK(std::abs(y.norm() - 1.0) <= 1e-9);

    const auto hyp = ConformalMetric::hyperbolic_ball(3);
    for (const auto& y : hyp.sphere_sample(ExtPoint::zero(3), std::log(3.0), 32, seed))
        CHECK(std::abs(y.norm() - 0.5) <= 1e-9);

    const auto sph = ConformalMetric::spherical(3);
    for (const auto& y : sph.sphere_sample(ExtPoint::zero(3), M_PI / 2, 32, seed))
        CHECK(std::abs(y.norm() - 1.0) <= 1e-9);

    // Off-center spherical spheres, including radii past pi/2.
    const ExtPoint c{1.2, -0.7, 0.3};
    for (double r : {0.25, 1.0, 2.8})
        for (const auto& y : sph.sphere_sample(c, r, 16, seed))
            CHECK(std::abs(dist_spherical(c, y) - r) <= 1e-9 * std::max(1.0, r));

    // Off-center hyperbolic spheres.
    const ExtPoint hc{0.4, 0.2, -0.5};
    for (double r : {0.1, 1.0, 4.0})
        for (const auto& y : hyp.sphere_sample(hc, r, 16, seed))
            CHECK(std::abs(dist_hyperbolic(hc, y) - r) <= 1e-9 * std::max(1.0, r));

    // Determinism and error paths.
    const auto s1 = sph.sphere_sample(c, 1.0, 8, 42);
    const auto s2 = sph.sphere_sample(c, 1.0, 8, 42);
    for (int i = 0; i < 8; ++i) CHECK(s1[i] == s2[i]);
    CHECK_THROWS_AS(sph.sphere_sample(ExtPoint::zero(3), 3.5, 4, seed), std::range_error);
    CHECK_THROWS_AS(euc.sphere_sample(ExtPoint::zero(3), -1.0, 4, seed), std::range_error);
}

TEST_CASE("quasihyperbolic half-space estimate brackets the log ratio") {
    const auto dom = Region::half_space(2);
    QhRefinement refine{32, 2, 8};
    const ExtPoint x{0.0, 0.2}, y{0.0, 1.7};
    const auto est = dist_quasihyperbolic(dom, x, y, refine);
    const double truth = std::log(1.7 / 0.2);
    CHECK(est.lower_bound <= truth + 1e-9);
    CHECK(est.upper_bound >= truth - 1e-9);
    CHECK(est.lower_bound <= est.value);
    CHECK(est.value <= est.upper_bound);
    // The vertical segment is the geodesic and is offered as a direct edge.
    CHECK(std::abs(est.value - truth) < 1e-3);

    const auto zero = dist_quasihyperbolic(dom, x, x, refine);
    CHECK(zero.value == 0.0);
}

TEST_CASE("quasihyperbolic unit-ball estimate sits in the density sandwich") {
    const auto dom = Region::unit_ball(2);
    QhRefinement refine{32, 2, 8};
    const ExtPoint x{0.0, 0.0}, y{0.5, 0.0};
    const double rho = dist_hyperbolic(ExtPoint::zero(2), ExtPoint{0.5, 0.0});
    const auto est = dist_quasihyperbolic(dom, x, y, refine);
    CHECK(est.value >= rho / 2 - 1e-9);
    CHECK(est.value <= rho + 1e-9);
    CHECK(std::abs(est.value - std::log(2.0)) < 1e-3);  // radial geodesic, exact value log 2
}

TEST_CASE("quasihyperbolic refinement is monotone") {
    const auto dom = Region::unit_ball(2);
    const ExtPoint x{0.3, 0.0}, y{0.0, 0.5};
    double prev_upper = std::numeric_limits<double>::infinity();
    double prev_lower = -std::numeric_limits<double>::infinity();
    for (int levels = 1; levels <= 3; ++levels) {
        const auto est = dist_quasihyperbolic(dom, x, y, QhRefinement{16, levels, 8});
        CHECK(est.upper_bound <= prev_upper + 1e-12);
        CHECK(est.lower_bound >= prev_lower - 1e-12);
        prev_upper = est.upper_bound;
        prev_lower = est.lower_bound;
    }
}

TEST_CASE("quasihyperbolic domain errors") {
    CHECK_THROWS_AS(ConformalMetric::quasihyperbolic(Region::all_rn(2)), std::domain_error);
    const auto dom = Region::unit_ball(2);
    CHECK_THROWS_AS(dist_quasihyperbolic(dom, ExtPoint{2.0, 0.0}, ExtPoint{0.0, 0.0}, {}),
                    std::domain_error);
}

TEST_CASE("quasihyperbolic graph metric: symmetry and triangle inequality") {
    QhGraph graph(Region::unit_ball(2), ExtPoint{-0.9, -0.9}, ExtPoint{0.9, 0.9}, 24, 6);
    const int V = graph.vertex_count();
    REQUIRE(V > 50);
    Rng rng(55);
    std::vector<int> picks;
    for (int i = 0; i < 40; ++i) picks.push_back(static_cast<int>(rng.next_u64() % V));
    std::vector<std::vector<double>> d;
    for (int p : picks) d.push_back(graph.distances_from(p));
    for (int t = 0; t < 10000; ++t) {
        const int i = static_cast<int>(rng.next_u64() % picks.size());
        const int j = static_cast<int>(rng.next_u64() % picks.size());
        const int k = static_cast<int>(rng.next_u64() % picks.size());
        const double dij = d[i][picks[j]], dji = d[j][picks[i]];
        const double djk = d[j][picks[k]], dik = d[i][picks[k]];
        if (!std::isfinite(dij) || !std::isfinite(djk) || !std::isfinite(dik)) continue;
        const double scale = std::max({dij, djk, dik, 1e-30});
        CHECK(std::abs(dij - dji) <= 1e-9 * scale);
        CHECK(dik <= dij + djk + 1e-9 * scale);
    }
}

TEST_CASE("escher condition profiles") {
    const int n = 3;
    const auto hyp = ConformalMetric::hyperbolic_ball(n);
    const auto sph = ConformalMetric::spherical(n);
    const auto euc = ConformalMetric::euclidean(n);

    SUBCASE("hyperbolic vs spherical decays like (1-|x|^2)/(1+|x|^2)") {
        const auto prof = escher_ratio_profile(hyp, sph, ExtPoint::zero(n),
                                               ExtPoint::axis(n, 0), 25, 1e-7);
        CHECK(prof.escher_evidence);
        for (const auto& s : prof.samples) {
            const double x = 1.0 - s.parameter;
            const double expected = (1.0 - x * x) / (1.0 + x * x);
            CHECK(s.ratio == doctest::Approx(expected).epsilon(1e-12));
        }
        // At |x| = 1 - 10^-k the ratio is at most 2 * 10^-k.
        for (int k = 2; k <= 6; ++k) {
            const double x = 1.0 - std::pow(10.0, -k);
            const ExtPoint p = ExtPoint::axis(n, 0, x);
            const double ratio = sph.density(p) / hyp.density(p);
            CHECK(ratio <= 2.0 * std::pow(10.0, -k));
        }
    }

    SUBCASE("euclidean vs spherical decays along rays to inf") {
        const auto prof = escher_ratio_profile(euc, sph, ExtPoint{0.5, 0.0, 0.0},
                                               ExtPoint::infinity(n), 25, 1e-6);
        CHECK(prof.escher_evidence);
        CHECK(prof.samples.back().ratio < 1e-6);
    }

    SUBCASE("identical metrics fail the condition") {
        const auto prof = escher_ratio_profile(euc, euc, ExtPoint::zero(n),
                                               ExtPoint::infinity(n), 25, 1e-6);
        CHECK_FALSE(prof.escher_evidence);
        for (const auto& s : prof.samples) CHECK(s.ratio == doctest::Approx(1.0));
    }

    SUBCASE("ray exiting Y is a domain error") {
        CHECK_THROWS_AS(escher_ratio_profile(hyp, sph, ExtPoint::zero(n),
                                             ExtPoint::axis(n, 0, 2.0), 10, 1e-6),
                        std::domain_error);
    }
}

TEST_SUITE_END();
