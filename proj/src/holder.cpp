#include "qrlab/holder.hpp"

#include <cmath>

#include "qrlab/parallel.hpp"
#include "qrlab/rng.hpp"

namespace qrlab {

namespace {

double range_distance(const ConformalMetric& metric_out, const ExtPoint& a, const ExtPoint& b) {
    if (metric_out.kind() == MetricKind::Spherical) return dist_spherical(a, b);
    if (a.is_inf() || b.is_inf()) return std::numeric_limits<double>::infinity();
    return metric_out.distance(a, b);
}

}  // namespace

HolderFit holder_constant(const MapDescriptor& f, const ConformalMetric& metric_in,
                          const ConformalMetric& metric_out, const SampleRegion& region,
                          double alpha, int pairs, std::uint64_t seed,
                          bool pairs_through_center) {
    if (!(alpha > 0.0) || alpha > 1.0) throw std::invalid_argument("holder_constant: alpha in (0,1]");
    if (pairs < 2) throw std::invalid_argument("holder_constant: pairs >= 2 required");
    const double bd = f.domain().boundary_dist(region.center);
    if (bd <= region.radius)
        throw std::domain_error("holder_constant: region touches the domain boundary");
    const double bd_in = metric_in.domain().boundary_dist(region.center);
    if (bd_in <= region.radius)
        throw std::domain_error("holder_constant: region touches the metric's domain boundary");

    const int n = f.dim();
    const double s_max = region.radius;
    const double s_min = s_max * 1e-4;

    std::vector<double> din(pairs, 0.0), dout(pairs, 0.0);
    std::vector<ExtPoint> xs(pairs, ExtPoint(n)), ys(pairs, ExtPoint(n));

    parallel_for(pairs, [&](std::int64_t k) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
        ExtPoint x = (pairs_through_center || rng.next_u64() % 8 == 0)
                         ? region.center
                         : region.center + rng.in_ball(n, region.radius * 0.9);
        const double s = rng.log_uniform(s_min, s_max);
        ExtPoint y = x + rng.unit_vector(n) * s;
        for (int tries = 0; euclid_dist(y, region.center) > region.radius && tries < 64; ++tries)
            y = x + rng.unit_vector(n) * s;
        if (euclid_dist(y, region.center) > region.radius) y = region.center;
        xs[k] = x;
        ys[k] = y;
        din[k] = metric_in.distance(x, y);
        dout[k] = range_distance(metric_out, f.eval(x), f.eval(y));
    });

    HolderFit fit;
    fit.alpha_used = alpha;
    fit.pair_count = pairs;
    fit.seed = seed;
    fit.argmax_x = region.center;
    fit.argmax_y = region.center;

    std::vector<double> lx, ly;
    double best = 0.0;
    int best_k = -1;
    for (int k = 0; k < pairs; ++k) {
        if (!(din[k] > 0.0)) continue;
        const double ratio = dout[k] / std::pow(din[k], alpha);
        if (ratio > best) {
            best = ratio;
            best_k = k;
        }
        if (dout[k] > 1e-300 && std::isfinite(dout[k])) {
            lx.push_back(std::log(din[k]));
            ly.push_back(std::log(dout[k]));
        }
    }
    fit.L_hat = best;
    if (best_k >= 0) {
        fit.argmax_x = xs[best_k];
        fit.argmax_y = ys[best_k];
    }
    if (lx.size() >= 2) {
        const LinearFit lf = fit_line(lx, ly);
        fit.exponent_hat = lf.slope;
        fit.residual = lf.residual_rms;
    } else {
        fit.degenerate = true;
    }
    return fit;
}

HolderFit local_holder_exponent(const MapDescriptor& f, const ConformalMetric& metric_in,
                                const ConformalMetric& metric_out, const ExtPoint& x0,
                                const std::vector<double>& scales, int probes_per_scale,
                                std::uint64_t seed) {
    if (scales.size() < 2) throw std::invalid_argument("local_holder_exponent: >= 2 scales");
    if (probes_per_scale < 1) throw std::invalid_argument("local_holder_exponent: probes >= 1");
    if (!f.domain().contains(x0)) throw std::domain_error("local_holder_exponent: x0 not interior");

    const ExtPoint fx0 = f.eval(x0);
    std::vector<double> osc(scales.size(), 0.0);
    parallel_for(static_cast<std::int64_t>(scales.size()), [&](std::int64_t i) {
        const auto probes =
            metric_in.sphere_sample(x0, scales[i], probes_per_scale,
                                    derive_seed(seed, static_cast<std::uint64_t>(i)));
        double m = 0.0;
        for (const auto& y : probes) {
            if (!f.domain().contains(y)) continue;
            m = std::max(m, range_distance(metric_out, fx0, f.eval(y)));
        }
        osc[i] = m;
    });

    HolderFit fit;
    fit.alpha_used = 0.0;
    fit.pair_count = static_cast<int>(scales.size()) * probes_per_scale;
    fit.seed = seed;
    fit.argmax_x = x0;
    fit.argmax_y = x0;

    std::vector<double> lx, ly;
    for (size_t i = 0; i < scales.size(); ++i) {
        if (osc[i] > 1e-300 && std::isfinite(osc[i])) {
            lx.push_back(std::log(scales[i]));
            ly.push_back(std::log(osc[i]));
            fit.L_hat = std::max(fit.L_hat, osc[i] / scales[i]);
        }
    }
    if (lx.size() < 2) {
        fit.degenerate = true;
        fit.exponent_hat = std::numeric_limits<double>::quiet_NaN();
        return fit;
    }
    const LinearFit lf = fit_line(lx, ly);
    fit.exponent_hat = lf.slope;
    fit.residual = lf.residual_rms;
    return fit;
}

double q_estimate(const MapDescriptor& f, const ConformalMetric& metric_in,
                  const ConformalMetric& metric_out, const ExtPoint& x, double alpha,
                  const std::vector<double>& scales, int probes_per_scale, std::uint64_t seed) {
    if (scales.empty()) throw std::invalid_argument("q_estimate: scales required");
    const ExtPoint fx = f.eval(x);
    double q = 0.0;
    for (size_t i = 0; i < scales.size(); ++i) {
        const auto probes = metric_in.sphere_sample(
            x, scales[i], probes_per_scale, derive_seed(seed, static_cast<std::uint64_t>(i)));
        double m = 0.0;
        for (const auto& y : probes) {
            if (!f.domain().contains(y)) continue;
            const double d_in = metric_in.distance(x, y);
            m = std::max(m, range_distance(metric_out, fx, f.eval(y)) / std::pow(d_in, alpha));
        }
        q = std::max(q, m);
    }
    return q;
}

}  // namespace qrlab
