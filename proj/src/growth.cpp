#include "qrlab/growth.hpp"

#include <cmath>

#include "qrlab/metrics.hpp"
#include "qrlab/numerics.hpp"
#include "qrlab/parallel.hpp"
#include "qrlab/rng.hpp"

namespace qrlab {

namespace {

double ball_volume(int n, double r) {
    return std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n + 1.0) * std::pow(r, n);
}

// 2^n J_f(x) / (1 + |f(x)|^2)^n, clamped at 0; -1 marks a failed evaluation.
double spherical_volume_density(const MapDescriptor& f, const ExtPoint& x) {
    if (!f.domain().contains(x)) return 0.0;
    try {
        const DistortionSample d = numeric_jacobian(f, x);
        const ExtPoint fx = f.eval(x);
        if (fx.is_inf()) return 0.0;
        const double denom = std::pow(1.0 + fx.norm_sq(), f.dim());
        if (!std::isfinite(denom)) return 0.0;
        const double g = std::pow(2.0, f.dim()) * std::max(0.0, d.jacobian_det) / denom;
        return std::isfinite(g) ? g : -1.0;
    } catch (const std::exception&) {
        return -1.0;
    }
}

}  // namespace

GrowthSeries growth_suite(const MapDescriptor& f, const ExtPoint& x0,
                          const std::vector<double>& radii, int sphere_samples,
                          std::int64_t mc_samples, std::uint64_t seed) {
    if (radii.empty()) throw std::invalid_argument("growth_suite: radii required");
    for (size_t i = 1; i < radii.size(); ++i)
        if (radii[i] <= radii[i - 1]) throw std::invalid_argument("growth_suite: radii must increase");

    const int n = f.dim();
    GrowthSeries out;
    out.radii = radii;
    out.seed = seed;
    out.omega_n = sphere_surface_measure(n);
    out.ball_domain = f.domain().kind() == Region::Kind::UnitBall;
    if (out.ball_domain && radii.back() >= 1.0)
        throw std::invalid_argument("growth_suite: ball-domain maps need radii < 1");

    // Maximum modulus by sphere sampling; the 2n axis directions are always
    // probed so exact axial growth like the Zorich beam is not missed.
    out.M.assign(radii.size(), 0.0);
    parallel_for(static_cast<std::int64_t>(radii.size()), [&](std::int64_t i) {
        const double r = radii[i];
        Rng rng(derive_seed(seed, 0x300000 + static_cast<std::uint64_t>(i)));
        double m = 0.0;
        const auto probe = [&](const ExtPoint& dir) {
            const ExtPoint x = dir * r;  // M(r, f) is the sup over |x| = r
            if (!f.domain().contains(x)) return;
            const ExtPoint v = f.eval(x);
            m = std::max(m, v.is_inf() ? std::numeric_limits<double>::infinity() : v.norm());
        };
        for (int k = 0; k < n; ++k) {
            probe(ExtPoint::axis(n, k));
            probe(ExtPoint::axis(n, k, -1.0));
        }
        for (int s = 0; s < sphere_samples; ++s) probe(rng.unit_vector(n));
        out.M[i] = m;
    });

    // Monte Carlo spherical averages on nested balls: one pool of points in
    // the largest ball, each radius masks its subset. Nondecreasing in r by
    // construction since the integrand is clamped nonnegative.
    const double r_max = radii.back();
    std::vector<double> g(mc_samples, 0.0), dist0(mc_samples, 0.0);
    parallel_for(mc_samples, [&](std::int64_t i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        const ExtPoint x = x0 + rng.in_ball(n, r_max);
        dist0[i] = euclid_dist(x, x0);
        g[i] = spherical_volume_density(f, x);
    });

    std::int64_t failures = 0;
    for (std::int64_t i = 0; i < mc_samples; ++i)
        if (g[i] < 0.0) ++failures;
    if (failures * 100 > mc_samples)
        throw numeric_error("growth_suite: more than 1% of Jacobian evaluations failed");

    const double vol = ball_volume(n, r_max);
    out.A.assign(radii.size(), 0.0);
    out.A_stderr.assign(radii.size(), 0.0);
    for (size_t j = 0; j < radii.size(); ++j) {
        const double r = radii[j];
        const double sum = blocked_sum_serial(mc_samples, [&](std::int64_t i) {
            return (g[i] > 0.0 && dist0[i] <= r) ? g[i] : 0.0;
        });
        const double mean = sum / mc_samples;
        const double sq = blocked_sum_serial(mc_samples, [&](std::int64_t i) {
            const double v = (g[i] > 0.0 && dist0[i] <= r) ? g[i] : 0.0;
            return (v - mean) * (v - mean);
        });
        const double factor = vol / out.omega_n;
        out.A[j] = factor * mean;
        out.A_stderr[j] = factor * std::sqrt(sq / mc_samples / mc_samples);
    }

    // Order and lower order from the upper tail of the radii.
    std::vector<double> ratios;
    for (size_t j = radii.size() / 2; j < radii.size(); ++j) {
        const double denom = out.ball_domain ? std::log(1.0 / (1.0 - radii[j])) : std::log(radii[j]);
        if (denom <= 0.01) continue;
        if (!(out.M[j] > 1.0 + 1e-12)) continue;
        if (std::isinf(out.M[j])) {
            ratios.push_back(std::numeric_limits<double>::infinity());
            continue;
        }
        ratios.push_back((n - 1) * std::log(std::log(out.M[j])) / denom);
    }
    if (!ratios.empty()) {
        out.mu_hat = *std::max_element(ratios.begin(), ratios.end());
        out.lambda_hat = *std::min_element(ratios.begin(), ratios.end());
    }
    return out;
}

std::vector<double> spherical_average_serial(const MapDescriptor& f, const ExtPoint& x0,
                                             const std::vector<double>& radii,
                                             std::int64_t mc_samples, std::uint64_t seed) {
    const int n = f.dim();
    const double r_max = radii.back();
    const double vol = ball_volume(n, r_max);
    const double omega_n = sphere_surface_measure(n);
    std::vector<double> acc(radii.size(), 0.0);
    for (std::int64_t i = 0; i < mc_samples; ++i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        const ExtPoint x = x0 + rng.in_ball(n, r_max);
        const double gi = spherical_volume_density(f, x);
        if (gi <= 0.0) continue;
        const double d = euclid_dist(x, x0);
        for (size_t j = 0; j < radii.size(); ++j)
            if (d <= radii[j]) acc[j] += gi;
    }
    for (auto& a : acc) a = vol / omega_n * (a / mc_samples);
    return acc;
}

}  // namespace qrlab
