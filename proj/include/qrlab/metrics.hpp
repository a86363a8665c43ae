#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qrlab/geometry.hpp"
#include "qrlab/region.hpp"

namespace qrlab {

enum class MetricKind { Euclidean, Spherical, HyperbolicBall, Quasihyperbolic };

struct QhRefinement {
    int cells_per_axis = 48;  // grid resolution at the coarsest level
    int levels = 2;           // each further level halves the spacing
    int panels_per_edge = 8;  // Simpson panels per graph edge
};

// Distance estimate for metrics without a closed form. Closed-form results
// use lower == value == upper.
struct GeodesicEstimate {
    double value = 0.0;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    enum class Method { ClosedForm, GraphRefinement } method = Method::ClosedForm;
};

// One of the four conformal metric spaces: density tau, distance, sphere
// sampling. Spherical lives on all of S^n; hyperbolic on the unit ball;
// quasihyperbolic on a proper subdomain.
class ConformalMetric {
public:
    static ConformalMetric euclidean(int n) {
        return ConformalMetric(MetricKind::Euclidean, Region::all_rn(n));
    }
    static ConformalMetric spherical(int n) {
        return ConformalMetric(MetricKind::Spherical, Region::sphere_sn(n));
    }
    static ConformalMetric hyperbolic_ball(int n) {
        return ConformalMetric(MetricKind::HyperbolicBall, Region::unit_ball(n));
    }
    static ConformalMetric quasihyperbolic(Region domain, QhRefinement refine = {});

    MetricKind kind() const { return kind_; }
    int dim() const { return domain_.dim(); }
    const Region& domain() const { return domain_; }

    // tau(x). For the spherical metric at inf the chart swap is applied, so
    // the returned density is the one seen in the swapped chart.
    double density(const ExtPoint& x) const;

    // Distance; exact closed forms except quasihyperbolic, which reports the
    // value of its graph estimate.
    double distance(const ExtPoint& x, const ExtPoint& y) const;

    GeodesicEstimate distance_estimate(const ExtPoint& x, const ExtPoint& y) const;

    // Supremum of distance(center, .) over the space.
    double diameter_from(const ExtPoint& center) const;

    // count points y with |distance(center, y) - r| <= 1e-9 max(1, r),
    // deterministic in seed: random directions, radial bisection.
    std::vector<ExtPoint> sphere_sample(const ExtPoint& center, double r, int count,
                                        std::uint64_t seed) const;

    const QhRefinement& refinement() const { return refine_; }

private:
    ConformalMetric(MetricKind k, Region d) : kind_(k), domain_(std::move(d)) {}

    MetricKind kind_;
    Region domain_;
    QhRefinement refine_;
};

// Great-circle distance on S^n in the chart R^n u {inf}: for finite points
// 2 asin(|u-v| / sqrt((1+|u|^2)(1+|v|^2))), with inf through the chart swap.
double dist_spherical(const ExtPoint& u, const ExtPoint& v);

// Poincare ball distance, density 2/(1-|x|^2).
double dist_hyperbolic(const ExtPoint& x, const ExtPoint& y);

// Quasihyperbolic bracket via Dijkstra on a grid graph with per-edge Simpson
// weights; lower bound from the log-potential inequalities.
GeodesicEstimate dist_quasihyperbolic(const Region& domain, const ExtPoint& x, const ExtPoint& y,
                                      const QhRefinement& refine);

// Precomputed grid graph over a box inside a quasihyperbolic domain, for
// property tests needing many pairwise distances on one fixed graph.
class QhGraph {
public:
    QhGraph(const Region& domain, const ExtPoint& box_lo, const ExtPoint& box_hi,
            int cells_per_axis, int panels_per_edge);

    int vertex_count() const { return static_cast<int>(verts_.size()); }
    const ExtPoint& vertex(int i) const { return verts_[i]; }

    // Single-source shortest path distances to every vertex.
    std::vector<double> distances_from(int source) const;

private:
    std::vector<ExtPoint> verts_;
    std::vector<std::vector<std::pair<int, double>>> adj_;
};

struct EscherSample {
    double parameter = 0.0;  // |x - zeta| for finite endpoints, |x| for rays to inf
    double ratio = 0.0;      // tau_Z(x) / tau_Y(x)
};

struct EscherProfile {
    std::vector<EscherSample> samples;
    bool escher_evidence = false;
    double decay_threshold = 1e-3;  // evidence iff last ratio <= threshold * first
};

// Ratio tau_Z / tau_Y along a ray from x0 toward zeta in the boundary of Y
// (zeta may be inf when Y is all of R^n). Samples approach the boundary
// geometrically down to gap_min (distance to zeta, or 1/|x| for rays to inf).
EscherProfile escher_ratio_profile(const ConformalMetric& tau_Y, const ConformalMetric& tau_Z,
                                   const ExtPoint& x0, const ExtPoint& zeta, int steps,
                                   double gap_min = 1e-6, double decay_threshold = 1e-3);

}  // namespace qrlab
