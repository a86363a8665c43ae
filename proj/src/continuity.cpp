#include "qrlab/continuity.hpp"

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

// Base point drawn near the origin of the sampler's space.
ExtPoint base_point(const IsometrySampler& sampler, double window, Rng& rng) {
    const int n = sampler.dim();
    switch (sampler.space()) {
        case IsometrySampler::Space::HyperbolicBall:
            return rng.in_ball(n, std::tanh(window / 2.0));
        case IsometrySampler::Space::Translations:
            return rng.in_ball(n, window);
        case IsometrySampler::Space::SphericalRotations:
            return rng.in_ball(n, std::tan(std::min(window, 1.5) / 2.0));
    }
    throw std::logic_error("unreachable");
}

}  // namespace

ContinuityProfile continuity_profile(const MapDescriptor& f, const IsometrySampler& sampler,
                                     const ConformalMetric& metric_in,
                                     const ConformalMetric& metric_out,
                                     const std::vector<double>& deltas, int samples,
                                     std::uint64_t seed, double pair_window,
                                     double threshold_factor, ExtPoint base) {
    if (base.dim() == 0) base = ExtPoint::zero(f.dim());
    if (!sampler.metric().domain().contains(base))
        throw std::invalid_argument("continuity_profile: base outside the sampler's space");
    if (deltas.empty()) throw std::invalid_argument("continuity_profile: empty delta list");
    for (size_t i = 1; i < deltas.size(); ++i)
        if (deltas[i] >= deltas[i - 1])
            throw std::invalid_argument("continuity_profile: deltas must decrease");
    if (samples < 1) throw std::invalid_argument("continuity_profile: samples >= 1 required");

    const double delta_max = deltas.front();
    const double delta_min = deltas.back();

    // One pooled draw per sample: an anchor, a base pair at log-uniform
    // separation. omega_hat(delta) is the sup over pool entries with
    // separation <= delta, so the table is monotone by construction.
    std::vector<double> sep(samples, 0.0), val(samples, -1.0);
    std::vector<ExtPoint> us(samples, ExtPoint(f.dim())), vs(samples, ExtPoint(f.dim()));

    parallel_for(samples, [&](std::int64_t k) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
        const ExtPoint anchor = sampler.anchor_from(rng, sampler.window, sampler.anchor_radius);
        const MapDescriptor A = sampler.isometry_for_anchor(anchor);
        const ExtPoint x = base + base_point(sampler, pair_window, rng);
        if (!sampler.metric().domain().contains(x)) return;  // skipped
        const double s = rng.log_uniform(delta_min / 2.0, delta_max);
        ExtPoint y;
        try {
            y = sampler.metric().sphere_sample(x, s, 1, rng.next_u64())[0];
        } catch (const std::exception&) {
            return;  // skipped
        }
        const ExtPoint u = A.eval(x), v = A.eval(y);
        if (!f.domain().contains(u) || !f.domain().contains(v)) return;  // skipped
        sep[k] = sampler.metric().distance(x, y);
        val[k] = range_distance(metric_out, f.eval(u), f.eval(v));
        us[k] = u;
        vs[k] = v;
    });
    (void)metric_in;

    ContinuityProfile prof;
    prof.deltas = deltas;
    prof.omega_hat.assign(deltas.size(), 0.0);
    prof.samples = samples;
    prof.defect_u = ExtPoint(f.dim());
    prof.defect_v = ExtPoint(f.dim());

    for (int k = 0; k < samples; ++k) {
        if (val[k] < 0.0) {
            ++prof.skipped;
            continue;
        }
        for (size_t j = 0; j < deltas.size(); ++j)
            if (sep[k] <= deltas[j]) prof.omega_hat[j] = std::max(prof.omega_hat[j], val[k]);
        if (sep[k] <= delta_min && val[k] > prof.defect_value) {
            prof.defect_value = val[k];
            prof.defect_u = us[k];
            prof.defect_v = vs[k];
        }
    }

    const double scale = metric_out.kind() == MetricKind::Spherical
                             ? M_PI
                             : std::max(prof.omega_hat.front(), 1e-300);
    prof.threshold = threshold_factor * scale;
    prof.verdict = prof.omega_hat.back() < prof.threshold ? NormalityVerdict::NormalEvidence
                                                          : NormalityVerdict::NotNormalEvidence;
    return prof;
}

OrbitCompactness orbit_compactness_probe(const std::vector<MapDescriptor>& family,
                                         const ExtPoint& x0, const Region& range_region,
                                         double ratio_threshold) {
    if (family.empty()) throw std::invalid_argument("orbit_compactness_probe: empty family");

    const auto margin = [&](const ExtPoint& y) {
        if (range_region.kind() == Region::Kind::SphereSn) return 1.0;  // compact range
        const double far = y.is_inf() ? 0.0 : 1.0 / (1.0 + y.norm());
        if (!range_region.has_boundary()) return far;
        if (y.is_inf()) return 0.0;
        return std::min(range_region.boundary_dist(y), far);
    };

    OrbitCompactness out;
    out.ratio_threshold = ratio_threshold;
    out.min_margin = std::numeric_limits<double>::infinity();
    out.max_margin = 0.0;
    for (size_t i = 0; i < family.size(); ++i) {
        const double m = margin(family[i].eval(x0));
        if (m < out.min_margin) {
            out.min_margin = m;
            out.witness = static_cast<int>(i);
        }
        out.max_margin = std::max(out.max_margin, m);
    }
    out.bounded = out.min_margin >= ratio_threshold * out.max_margin;
    if (out.bounded) out.witness = -1;
    return out;
}

}  // namespace qrlab
