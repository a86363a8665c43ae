#include "qrlab/bloch.hpp"

#include <cmath>

#include "qrlab/metrics.hpp"
#include "qrlab/parallel.hpp"
#include "qrlab/rng.hpp"

namespace qrlab {

namespace {

// Sampled Euclidean diameter of f(B_rho(center, ball_radius)): axis points of
// the hyperbolic sphere plus random boundary directions, max pairwise image
// distance. Infinite when f blows up on the ball.
double sampled_ball_diam(const MapDescriptor& f, const ExtPoint& center, double ball_radius,
                         int ball_samples, std::uint64_t seed) {
    const int n = f.dim();
    const double h = std::tanh(ball_radius / 2.0);  // Euclidean radius of B_rho(0, ball_radius)
    const MapDescriptor phi = mobius_ball_isometry(center);

    std::vector<ExtPoint> pts;
    for (int k = 0; k < n; ++k) {
        pts.push_back(ExtPoint::axis(n, k, h));
        pts.push_back(ExtPoint::axis(n, k, -h));
    }
    Rng rng(seed);
    for (int i = 0; i < ball_samples; ++i)
        pts.push_back(rng.unit_vector(n) * (h * std::sqrt(rng.next_double())));

    std::vector<ExtPoint> imgs;
    imgs.reserve(pts.size());
    for (const auto& w : pts) {
        const ExtPoint y = phi.eval(w);
        if (!f.domain().contains(y)) continue;
        const ExtPoint v = f.eval(y);
        if (v.is_inf()) return std::numeric_limits<double>::infinity();
        imgs.push_back(v);
    }
    double d = 0.0;
    for (size_t i = 0; i < imgs.size(); ++i)
        for (size_t j = i + 1; j < imgs.size(); ++j) d = std::max(d, euclid_dist(imgs[i], imgs[j]));
    return d;
}

// Lower bound for a ball radius around f(x) covered injectively near x:
// distance from f(x) to the image of a small sphere, with a pairwise
// injectivity spot-check on interior samples.
double injective_ball_probe(const MapDescriptor& f, const ExtPoint& x, std::uint64_t seed) {
    const int n = f.dim();
    const double u = 0.5 * std::min(0.2, f.domain().boundary_dist(x));
    if (!(u > 0.0)) return 0.0;
    const ExtPoint fx = f.eval(x);
    Rng rng(seed);
    double r = std::numeric_limits<double>::infinity();
    std::vector<ExtPoint> inner;
    for (int i = 0; i < 24; ++i) {
        const ExtPoint y = x + rng.unit_vector(n) * u;
        const ExtPoint fy = f.eval(y);
        if (fy.is_inf()) return 0.0;
        r = std::min(r, euclid_dist(fx, fy));
        inner.push_back(f.eval(x + rng.in_ball(n, 0.9 * u)));
    }
    for (size_t i = 0; i < inner.size(); ++i)
        for (size_t j = i + 1; j < inner.size(); ++j)
            if (euclid_dist(inner[i], inner[j]) < 1e-12) return 0.0;
    return std::isfinite(r) ? r : 0.0;
}

}  // namespace

BlochStats bloch_R(const MapDescriptor& f, int centers, const std::vector<double>& boundary_approach,
                   int ball_samples, std::uint64_t seed, double ball_radius) {
    if (centers < 1) throw std::invalid_argument("bloch_R: centers >= 1 required");
    if (boundary_approach.empty()) throw std::invalid_argument("bloch_R: no |x| levels given");
    const int n = f.dim();
    const Region ball = Region::unit_ball(n);
    for (const auto& p : f.poles())
        if (ball.contains(p)) throw std::domain_error("bloch_R: map has a pole in the unit ball");
    for (double lv : boundary_approach)
        if (!(lv >= 0.0) || lv >= 1.0) throw std::invalid_argument("bloch_R: levels must be in [0,1)");

    BlochStats stats;
    stats.ball_radius = ball_radius;
    stats.seed = seed;
    stats.f0_norm = f.eval(ExtPoint::zero(n)).norm();

    // Random-direction centers at the requested levels, plus the origin.
    std::vector<ExtPoint> cs;
    cs.push_back(ExtPoint::zero(n));
    {
        Rng rng(derive_seed(seed, 0x5eed));
        for (int i = 0; i < centers; ++i) {
            const double lv = boundary_approach[i % boundary_approach.size()];
            cs.push_back(rng.unit_vector(n) * lv);
        }
    }

    std::vector<double> diams(cs.size(), 0.0);
    parallel_for(static_cast<std::int64_t>(cs.size()), [&](std::int64_t i) {
        diams[i] = sampled_ball_diam(f, cs[i], ball_radius, ball_samples,
                                     derive_seed(seed, static_cast<std::uint64_t>(i)));
    });
    for (double d : diams) stats.sup_diam = std::max(stats.sup_diam, d);

    // Little-Bloch witness family along the -e_n axis.
    stats.little_bloch_curve.resize(boundary_approach.size());
    parallel_for(static_cast<std::int64_t>(boundary_approach.size()), [&](std::int64_t i) {
        const double lv = boundary_approach[i];
        const ExtPoint axis_center = ExtPoint::axis(n, n - 1, -lv);
        stats.little_bloch_curve[i] = {
            lv, sampled_ball_diam(f, axis_center, ball_radius, ball_samples,
                                  derive_seed(seed, 0x11000 + static_cast<std::uint64_t>(i)))};
        });
    for (const auto& p : stats.little_bloch_curve) stats.sup_diam = std::max(stats.sup_diam, p.diam);

    stats.R_hat = stats.f0_norm + stats.sup_diam;

    // Injective-image ball search over a light subsample of the centers.
    double probe = 0.0;
    for (size_t i = 0; i < cs.size(); i += std::max<size_t>(1, cs.size() / 32))
        probe = std::max(probe, injective_ball_probe(f, cs[i], derive_seed(seed, 0x22000 + i)));
    stats.bloch_radius_probe = probe;
    return stats;
}

std::vector<GrowthBoundRow> bloch_growth_check(const MapDescriptor& f,
                                               const std::vector<double>& radii,
                                               const BlochStats& stats, int sphere_samples,
                                               std::uint64_t seed, double slack) {
    const int n = f.dim();
    std::vector<GrowthBoundRow> rows;
    for (size_t i = 0; i < radii.size(); ++i) {
        const double r = radii[i];
        GrowthBoundRow row;
        row.r = r;
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        std::vector<ExtPoint> dirs;
        for (int k = 0; k < n; ++k) {
            dirs.push_back(ExtPoint::axis(n, k));
            dirs.push_back(ExtPoint::axis(n, k, -1.0));
        }
        for (int s = 0; s < sphere_samples; ++s) dirs.push_back(rng.unit_vector(n));
        for (const auto& d : dirs) {
            const ExtPoint x = d * r;
            if (!f.domain().contains(x)) continue;
            row.M = std::max(row.M, f.eval(x).norm());
        }
        row.bound = stats.R_hat * std::max(1.0, std::log((1.0 + r) / (1.0 - r)));
        row.pass = row.M <= slack * row.bound;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace qrlab
