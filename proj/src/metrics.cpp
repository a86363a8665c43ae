#include "qrlab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "qrlab/numerics.hpp"
#include "qrlab/rng.hpp"
#include "qrlab/sphere_rotation.hpp"

namespace qrlab {

namespace {

double sqrt1p_sq(double m) {
    // sqrt(1 + m^2) without overflow for large m.
    return m >= 1.0 ? m * std::sqrt(1.0 + 1.0 / (m * m)) : std::sqrt(1.0 + m * m);
}

}  // namespace

double dist_spherical(const ExtPoint& u, const ExtPoint& v) {
    if (u.is_inf() && v.is_inf()) return 0.0;
    if (u.is_inf()) return dist_spherical(v, u);
    if (v.is_inf()) {
        const double m = u.norm();
        if (m > kChartSwapThreshold) return 2.0 * std::asin(std::min(1.0, 1.0 / m));
        return 2.0 * std::asin(1.0 / sqrt1p_sq(m));
    }
    const double mu = u.norm(), mv = v.norm();
    if (mu > kChartSwapThreshold || mv > kChartSwapThreshold)
        return dist_spherical(chart_swap(u), chart_swap(v));
    const double q = euclid_dist(u, v) / (sqrt1p_sq(mu) * sqrt1p_sq(mv));
    return 2.0 * std::asin(std::min(1.0, q));
}

double dist_hyperbolic(const ExtPoint& x, const ExtPoint& y) {
    if (x.is_inf() || y.is_inf()) throw std::domain_error("dist_hyperbolic: point not in the unit ball");
    const double mx = x.norm(), my = y.norm();
    if (mx >= 1.0 || my >= 1.0)
        throw std::domain_error("dist_hyperbolic: point on or outside the unit sphere");
    if (x == y) return 0.0;
    const double w = euclid_dist(x, y) / std::sqrt((1.0 - mx * mx) * (1.0 - my * my));
    return 2.0 * std::asinh(w);
}

ConformalMetric ConformalMetric::quasihyperbolic(Region domain, QhRefinement refine) {
    if (!domain.has_boundary())
        throw std::domain_error("quasihyperbolic metric needs a proper subdomain of R^n");
    ConformalMetric m(MetricKind::Quasihyperbolic, std::move(domain));
    m.refine_ = refine;
    return m;
}

double ConformalMetric::density(const ExtPoint& x) const {
    switch (kind_) {
        case MetricKind::Euclidean:
            if (x.is_inf()) throw std::domain_error("euclidean density undefined at inf");
            return 1.0;
        case MetricKind::Spherical: {
            const ExtPoint p = x.is_inf() ? chart_swap(x) : x;
            const double m = p.norm();
            if (m > kChartSwapThreshold) {
                const double s = chart_swap(p).norm();
                return 2.0 / (1.0 + s * s);
            }
            return 2.0 / (1.0 + m * m);
        }
        case MetricKind::HyperbolicBall: {
            if (x.is_inf() || x.norm() >= 1.0)
                throw std::domain_error("hyperbolic density: point outside the open unit ball");
            return 2.0 / (1.0 - x.norm_sq());
        }
        case MetricKind::Quasihyperbolic: {
            const double d = domain_.boundary_dist(x);
            if (!(d > 0.0)) throw std::domain_error("quasihyperbolic density: point outside domain");
            return 1.0 / d;
        }
    }
    throw std::logic_error("unreachable");
}

double ConformalMetric::distance(const ExtPoint& x, const ExtPoint& y) const {
    return distance_estimate(x, y).value;
}

GeodesicEstimate ConformalMetric::distance_estimate(const ExtPoint& x, const ExtPoint& y) const {
    GeodesicEstimate e;
    if (x == y) return e;  // 0 in every metric, no sampling
    switch (kind_) {
        case MetricKind::Euclidean:
            if (x.is_inf() || y.is_inf()) throw std::domain_error("euclidean distance undefined at inf");
            e.value = euclid_dist(x, y);
            break;
        case MetricKind::Spherical:
            e.value = dist_spherical(x, y);
            break;
        case MetricKind::HyperbolicBall:
            e.value = dist_hyperbolic(x, y);
            break;
        case MetricKind::Quasihyperbolic:
            return dist_quasihyperbolic(domain_, x, y, refine_);
    }
    e.lower_bound = e.upper_bound = e.value;
    return e;
}

double ConformalMetric::diameter_from(const ExtPoint& center) const {
    (void)center;
    if (kind_ == MetricKind::Spherical) return M_PI;
    return std::numeric_limits<double>::infinity();
}

std::vector<ExtPoint> ConformalMetric::sphere_sample(const ExtPoint& center, double r, int count,
                                                     std::uint64_t seed) const {
    if (count < 1) throw std::invalid_argument("sphere_sample: count >= 1 required");
    if (!(r > 0.0)) throw std::range_error("sphere_sample: radius must be positive");
    if (r >= diameter_from(center)) throw std::range_error("sphere_sample: radius exceeds the space's reach");
    if (kind_ == MetricKind::Quasihyperbolic)
        throw std::domain_error("sphere_sample: not available for quasihyperbolic metrics");

    const int n = dim();
    const double tol = 1e-9 * std::max(1.0, r);

    // Normalize so bisection always starts from the origin of the chart:
    // spherical recenters by a rotation isometry, hyperbolic by nothing
    // (rays from any interior center reach every finite radius), euclidean
    // trivially. For hyperbolic we bisect from the center directly.
    std::optional<SphereRotation> back;
    ExtPoint base = center;
    if (kind_ == MetricKind::Spherical) {
        SphereRotation rot = SphereRotation::taking_to_zero(center);
        back = rot.inverse();
        base = ExtPoint::zero(n);
    } else if (center.is_inf()) {
        throw std::domain_error("sphere_sample: center must be finite for this metric");
    }

    const auto dist_along = [&](const ExtPoint& dir, double s) {
        // After recentring, spherical distances from 0 along a ray reduce to
        // 2 atan(s); the other metrics are measured from the actual center.
        if (kind_ == MetricKind::Spherical) return 2.0 * std::atan(s);
        ExtPoint y = base + dir * s;
        switch (kind_) {
            case MetricKind::Euclidean: return euclid_dist(base, y);
            case MetricKind::HyperbolicBall: return dist_hyperbolic(base, y);
            default: return 0.0;
        }
    };

    // For hyperbolic the ray must stay in the ball; cap the parameter there.
    const auto s_cap = [&](const ExtPoint& dir) {
        if (kind_ != MetricKind::HyperbolicBall) return std::numeric_limits<double>::infinity();
        // Solve |base + s dir| = 1 for s > 0.
        const double b = base.dot(dir);
        const double c = base.norm_sq() - 1.0;
        return -b + std::sqrt(b * b - c);
    };

    Rng rng(seed);
    std::vector<ExtPoint> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        const ExtPoint dir = rng.unit_vector(n);
        const double cap = s_cap(dir);
        double lo = 0.0, hi = std::min(1.0, 0.5 * cap);
        while (dist_along(dir, hi) < r) {
            lo = hi;
            hi = std::isinf(cap) ? hi * 2.0 : 0.5 * (hi + cap);
            if (hi > 1e200) throw std::range_error("sphere_sample: radius unreachable along ray");
        }
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double d = dist_along(dir, mid);
            if (std::abs(d - r) <= 0.25 * tol) {
                lo = hi = mid;
                break;
            }
            (d < r ? lo : hi) = mid;
        }
        ExtPoint y = base + dir * (0.5 * (lo + hi));
        if (back) y = back->apply(y);
        out.push_back(y);
    }
    return out;
}

EscherProfile escher_ratio_profile(const ConformalMetric& tau_Y, const ConformalMetric& tau_Z,
                                   const ExtPoint& x0, const ExtPoint& zeta, int steps,
                                   double gap_min, double decay_threshold) {
    if (steps < 2) throw std::invalid_argument("escher_ratio_profile: steps >= 2 required");
    EscherProfile prof;
    prof.decay_threshold = decay_threshold;

    const bool to_inf = zeta.is_inf();
    const int n = x0.dim();
    if (!tau_Y.domain().contains(x0)) throw std::domain_error("escher_ratio_profile: x0 outside Y");

    for (int j = 0; j < steps; ++j) {
        const double t = static_cast<double>(j) / (steps - 1);
        ExtPoint x(n);
        EscherSample s;
        if (to_inf) {
            // |x| grows geometrically from |x0|+1 up to 1/gap_min.
            const double r0 = x0.norm() + 1.0;
            const double r = r0 * std::pow(1.0 / (gap_min * r0), t);
            const ExtPoint dir = x0.norm() > 0 ? x0 * (1.0 / x0.norm()) : ExtPoint::axis(n, 0);
            x = dir * r;
            s.parameter = r;
        } else {
            // Gap to the boundary point shrinks geometrically to gap_min.
            const double gap0 = euclid_dist(x0, zeta);
            const double gap = gap0 * std::pow(gap_min / gap0, t);
            x = zeta + (x0 - zeta) * (gap / gap0);
            s.parameter = gap;
        }
        if (!tau_Y.domain().contains(x)) throw std::domain_error("escher_ratio_profile: ray exits Y");
        s.ratio = tau_Z.density(x) / tau_Y.density(x);
        prof.samples.push_back(s);
    }

    const double first = prof.samples.front().ratio;
    const double last = prof.samples.back().ratio;
    bool nonincreasing = true;
    for (size_t i = 1; i < prof.samples.size(); ++i)
        if (prof.samples[i].ratio > prof.samples[i - 1].ratio * (1.0 + 1e-12)) nonincreasing = false;
    prof.escher_evidence = nonincreasing && last <= decay_threshold * std::max(first, 1e-300);
    return prof;
}

// ---- quasihyperbolic graph estimator ----

namespace {

struct GridSpec {
    ExtPoint lo, hi;
    int cells = 0;
    int n = 0;
};

double segment_weight(const Region& dom, const ExtPoint& a, const ExtPoint& b, int panels) {
    const ExtPoint d = b - a;
    const double len = d.norm();
    if (len == 0.0) return 0.0;
    const auto f = [&](double t) {
        const ExtPoint p = a + d * t;
        const double bd = dom.boundary_dist(p);
        if (!(bd > 0.0)) return 1e30;  // segment grazes the boundary
        return 1.0 / bd;
    };
    return simpson(f, 0.0, 1.0, panels) * len;
}

double potential_lower_bound(const Region& dom, const ExtPoint& x, const ExtPoint& y) {
    const double dx = dom.boundary_dist(x), dy = dom.boundary_dist(y);
    const double l1 = std::abs(std::log(dx) - std::log(dy));
    const double l2 = std::log(1.0 + euclid_dist(x, y) / std::min(dx, dy));
    return std::max(l1, l2);
}

}  // namespace

QhGraph::QhGraph(const Region& domain, const ExtPoint& box_lo, const ExtPoint& box_hi,
                 int cells_per_axis, int panels_per_edge) {
    const int n = box_lo.dim();
    const int c = cells_per_axis;
    std::vector<double> h(n);
    for (int i = 0; i < n; ++i) h[i] = (box_hi[i] - box_lo[i]) / c;
    double hmin = h[0];
    for (int i = 1; i < n; ++i) hmin = std::min(hmin, h[i]);

    // Enumerate lattice points inside the domain with a safety margin so edge
    // integrals stay finite.
    std::vector<int> index_of;
    long total = 1;
    for (int i = 0; i < n; ++i) total *= (c + 1);
    index_of.assign(total, -1);

    const auto point_at = [&](long flat) {
        ExtPoint p(n);
        for (int i = 0; i < n; ++i) {
            p[i] = box_lo[i] + (flat % (c + 1)) * h[i];
            flat /= (c + 1);
        }
        return p;
    };

    for (long f = 0; f < total; ++f) {
        const ExtPoint p = point_at(f);
        if (domain.boundary_dist(p) > 0.25 * hmin) {
            index_of[f] = static_cast<int>(verts_.size());
            verts_.push_back(p);
        }
    }
    adj_.resize(verts_.size());

    // 3^n - 1 neighbor stencil.
    std::vector<long> strides(n);
    strides[0] = 1;
    for (int i = 1; i < n; ++i) strides[i] = strides[i - 1] * (c + 1);

    std::vector<int> off(n, -1);
    while (true) {
        bool all_zero = true;
        for (int i = 0; i < n; ++i) all_zero = all_zero && off[i] == 0;
        if (!all_zero) {
            for (long f = 0; f < total; ++f) {
                if (index_of[f] < 0) continue;
                long g = f;
                bool ok = true;
                long probe = f;
                for (int i = 0; i < n && ok; ++i) {
                    const int ci = static_cast<int>((probe / strides[i]) % (c + 1));
                    const int cj = ci + off[i];
                    if (cj < 0 || cj > c) ok = false;
                    g += off[i] * strides[i];
                }
                if (!ok || index_of[g] < 0) continue;
                if (g < f) continue;  // add each undirected edge once
                const double w =
                    segment_weight(domain, verts_[index_of[f]], verts_[index_of[g]], panels_per_edge);
                adj_[index_of[f]].push_back({index_of[g], w});
                adj_[index_of[g]].push_back({index_of[f], w});
            }
        }
        int i = 0;
        for (; i < n; ++i) {
            if (off[i] < 1) {
                ++off[i];
                break;
            }
            off[i] = -1;
        }
        if (i == n) break;
    }
}

std::vector<double> QhGraph::distances_from(int source) const {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(verts_.size(), inf);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[source] = 0.0;
    pq.push({0.0, source});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u]) continue;
        for (const auto& [v, w] : adj_[u]) {
            if (d + w < dist[v]) {
                dist[v] = d + w;
                pq.push({dist[v], v});
            }
        }
    }
    return dist;
}

GeodesicEstimate dist_quasihyperbolic(const Region& domain, const ExtPoint& x, const ExtPoint& y,
                                      const QhRefinement& refine) {
    if (!domain.has_boundary())
        throw std::domain_error("quasihyperbolic distance undefined on all of R^n");
    if (!domain.contains(x) || !domain.contains(y))
        throw std::domain_error("dist_quasihyperbolic: endpoint outside domain");

    GeodesicEstimate est;
    est.method = GeodesicEstimate::Method::GraphRefinement;
    if (x == y) {
        est.method = GeodesicEstimate::Method::ClosedForm;
        return est;
    }

    const int n = x.dim();
    est.lower_bound = potential_lower_bound(domain, x, y);

    // Box around the endpoints, inflated, clipped implicitly by the domain.
    const double sep = euclid_dist(x, y);
    const double pad = std::max(sep, 0.5 * std::min(domain.boundary_dist(x), domain.boundary_dist(y)));
    ExtPoint lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        lo[i] = std::min(x[i], y[i]) - pad;
        hi[i] = std::max(x[i], y[i]) + pad;
    }

    double best_upper = std::numeric_limits<double>::infinity();

    // Direct segment, when admissible, is itself a path.
    bool segment_ok = true;
    for (int k = 0; k <= 64 && segment_ok; ++k)
        segment_ok = domain.contains(x + (y - x) * (k / 64.0));
    if (segment_ok)
        best_upper = segment_weight(domain, x, y, std::max(32, refine.panels_per_edge * 4));

    int cells = refine.cells_per_axis;
    for (int level = 0; level < refine.levels; ++level, cells *= 2) {
        QhGraph graph(domain, lo, hi, cells, refine.panels_per_edge);

        // Inject endpoints: connect each to nearby grid vertices.
        std::vector<std::pair<int, double>> from_x, from_y;
        double hmax = 0.0;
        for (int i = 0; i < n; ++i) hmax = std::max(hmax, (hi[i] - lo[i]) / cells);
        const double reach = 2.0 * hmax * std::sqrt(static_cast<double>(n));
        for (int v = 0; v < graph.vertex_count(); ++v) {
            const double dxv = euclid_dist(x, graph.vertex(v));
            if (dxv <= reach)
                from_x.push_back({v, segment_weight(domain, x, graph.vertex(v), refine.panels_per_edge)});
            const double dyv = euclid_dist(y, graph.vertex(v));
            if (dyv <= reach)
                from_y.push_back({v, segment_weight(domain, y, graph.vertex(v), refine.panels_per_edge)});
        }
        if (from_x.empty() || from_y.empty()) continue;

        // Shortest x->grid->y path: run Dijkstra from the best handful of
        // x-attachments and take the min over y-attachments.
        double level_upper = std::numeric_limits<double>::infinity();
        std::sort(from_x.begin(), from_x.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        const int tries = std::min<size_t>(4, from_x.size());
        for (int t = 0; t < tries; ++t) {
            const auto dist = graph.distances_from(from_x[t].first);
            for (const auto& [v, wy] : from_y)
                level_upper = std::min(level_upper, from_x[t].second + dist[v] + wy);
        }
        best_upper = std::min(best_upper, level_upper);
    }

    if (!std::isfinite(best_upper))
        throw numeric_error("dist_quasihyperbolic: no admissible path found at this resolution");
    est.upper_bound = best_upper;
    est.value = best_upper;
    est.lower_bound = std::min(est.lower_bound, est.value);
    return est;
}

}  // namespace qrlab
