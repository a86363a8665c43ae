#include "qrlab/zalcman.hpp"

#include <cmath>

#include "qrlab/metrics.hpp"
#include "qrlab/parallel.hpp"
#include "qrlab/rng.hpp"

namespace qrlab {

namespace {

struct Candidate {
    ExtPoint a, x, y;
    double value = -1.0;
};

// Weighted ratio (1 - |x|^2/r^2) sigma(f(a+x), f(a+y)) / |x-y|^alpha, or -1
// when the pair leaves the domain.
double weighted_ratio(const MapDescriptor& f, const ExtPoint& a, const ExtPoint& x,
                      const ExtPoint& y, double alpha, double r) {
    const ExtPoint u = a + x, v = a + y;
    if (!f.domain().contains(u) || !f.domain().contains(v)) return -1.0;
    const double sep = euclid_dist(x, y);
    if (!(sep > 0.0)) return -1.0;
    const double w = 1.0 - x.norm_sq() / (r * r);
    if (!(w > 0.0)) return -1.0;
    const double s = dist_spherical(f.eval(u), f.eval(v));
    return w * s / std::pow(sep, alpha);
}

}  // namespace

ExtPoint rescaled_eval(const MapDescriptor& f, const RescalingStep& step, const ExtPoint& w) {
    return f.eval(step.x_m + w * step.rho_m);
}

RescalingSequence zalcman_rescale(const MapDescriptor& f, double alpha, double r_star,
                                  const ZalcmanRefinement& refine, std::uint64_t seed,
                                  double defect_threshold) {
    if (!(alpha > 0.0) || alpha > 1.0) throw std::invalid_argument("zalcman_rescale: alpha in (0,1]");
    if (!(r_star > 0.0)) throw std::invalid_argument("zalcman_rescale: r_star > 0 required");

    const int n = f.dim();
    const double r = r_star;

    RescalingSequence seq;
    seq.alpha = alpha;

    for (int m = 1; m <= refine.windows; ++m) {
        const double window = refine.window_base * std::pow(2.0, m - 1);

        // Stage 1: coarse search over (anchor, pair) triples. Separations are
        // log-uniform so both the Holder regime and the saturation regime of
        // the ratio are explored.
        std::vector<double> vals(refine.stage1_samples, -1.0);
        std::vector<Candidate> cands(refine.stage1_samples);
        parallel_for(refine.stage1_samples, [&](std::int64_t k) {
            Rng rng(derive_seed(seed, static_cast<std::uint64_t>(m) * 0x100000 +
                                          static_cast<std::uint64_t>(k)));
            Candidate c;
            c.a = rng.in_box(n, -window, window);
            c.x = rng.in_ball(n, r * 0.95);
            const double sep = rng.log_uniform(1e-6 * r, r);
            c.y = c.x + rng.unit_vector(n) * sep;
            if (c.y.norm() > r) return;
            c.value = weighted_ratio(f, c.a, c.x, c.y, alpha, r);
            vals[k] = c.value;
            cands[k] = c;
        });

        Candidate best;
        for (int k = 0; k < refine.stage1_samples; ++k)
            if (vals[k] > best.value) best = cands[k];
        if (best.value <= 0.0) continue;

        // Stage 2: shrinking local refinement around the argmax.
        Rng rng(derive_seed(seed, 0xAA00 + static_cast<std::uint64_t>(m)));
        double radius = 0.25 * r;
        for (int it = 0; it < refine.stage2_iters; ++it) {
            Candidate c = best;
            c.a = best.a + rng.in_ball(n, radius);
            c.x = best.x + rng.in_ball(n, radius);
            c.y = best.y + rng.in_ball(n, radius);
            if (c.x.norm() > r * 0.999 || c.y.norm() > r) {
                radius *= 0.97;
                continue;
            }
            c.value = weighted_ratio(f, c.a, c.x, c.y, alpha, r);
            if (c.value > best.value) best = c;
            radius *= 0.97;
        }

        seq.max_weighted_ratio = std::max(seq.max_weighted_ratio, best.value);
        if (best.value <= defect_threshold) continue;

        RescalingStep step;
        step.m = m;
        step.x_m = best.a + best.x;
        step.y_m = best.a + best.y;
        step.weighted_ratio = best.value;
        step.sigma_fxfy = dist_spherical(f.eval(step.x_m), f.eval(step.y_m));
        if (!(step.sigma_fxfy > 0.0)) continue;
        const double sep = euclid_dist(step.x_m, step.y_m);
        // rho^alpha = |x - y|^alpha / sigma(f(x), f(y)), eq. defining the scale.
        step.rho_m = std::pow(std::pow(sep, alpha) / step.sigma_fxfy, 1.0 / alpha);

        // Nonconstancy certificate: probe w = 0, the preimage of the defect
        // partner, and a few axis points.
        std::vector<ExtPoint> probes;
        probes.push_back(ExtPoint::zero(n));
        probes.push_back((step.y_m - step.x_m) * (1.0 / step.rho_m));
        for (int k = 0; k < n; ++k) {
            probes.push_back(ExtPoint::axis(n, k, 1.0));
            probes.push_back(ExtPoint::axis(n, k, -1.0));
        }
        for (size_t i = 0; i < probes.size() && !step.nonconstant; ++i)
            for (size_t j = i + 1; j < probes.size() && !step.nonconstant; ++j) {
                if (!f.domain().contains(step.x_m + probes[i] * step.rho_m)) continue;
                if (!f.domain().contains(step.x_m + probes[j] * step.rho_m)) continue;
                const double s = dist_spherical(rescaled_eval(f, step, probes[i]),
                                                rescaled_eval(f, step, probes[j]));
                if (s >= 0.1) {
                    step.cert_w1 = probes[i];
                    step.cert_w2 = probes[j];
                    step.cert_sep = s;
                    step.nonconstant = true;
                }
            }

        // Keep the subsequence along which the scales strictly decrease.
        if (seq.steps.empty() || step.rho_m < seq.steps.back().rho_m) seq.steps.push_back(step);
    }

    seq.yosida_evidence = seq.steps.empty();
    return seq;
}

double rescaled_holder_excess(const MapDescriptor& f, const RescalingStep& step, double alpha,
                              int pairs, double probe_radius, std::uint64_t seed) {
    const int n = f.dim();
    double excess = -std::numeric_limits<double>::infinity();
    Rng rng(seed);
    for (int k = 0; k < pairs; ++k) {
        const ExtPoint w1 = rng.in_ball(n, probe_radius);
        const ExtPoint w2 = rng.in_ball(n, probe_radius);
        const double t = euclid_dist(w1, w2);
        if (!(t > 0.0)) continue;
        if (!f.domain().contains(step.x_m + w1 * step.rho_m)) continue;
        if (!f.domain().contains(step.x_m + w2 * step.rho_m)) continue;
        const double s =
            dist_spherical(rescaled_eval(f, step, w1), rescaled_eval(f, step, w2));
        excess = std::max(excess, s - 2.0 * std::pow(t, alpha));
    }
    return excess;
}

}  // namespace qrlab
