#pragma once

#include <cstdint>
#include <vector>

#include "qrlab/maps.hpp"
#include "qrlab/metrics.hpp"

namespace qrlab {

// Euclidean ball in the chart used as the compact sampling region.
struct SampleRegion {
    ExtPoint center;
    double radius = 1.0;
};

struct HolderFit {
    double alpha_used = 0.0;
    double L_hat = 0.0;         // max d_Y(f(x), f(y)) / d_X(x, y)^alpha over pairs
    double exponent_hat = 0.0;  // slope of log d_Y against log d_X
    double residual = 0.0;      // rms residual of that regression
    int pair_count = 0;
    std::uint64_t seed = 0;
    ExtPoint argmax_x, argmax_y;  // pair attaining L_hat, for reproducibility
    bool degenerate = false;      // f constant at the sampled resolution
};

// Sup of the Holder ratio over seeded pairs whose separations are log-uniform
// across >= 4 decades; one endpoint occasionally pinned to the region center,
// or always when pairs_through_center is set.
HolderFit holder_constant(const MapDescriptor& f, const ConformalMetric& metric_in,
                          const ConformalMetric& metric_out, const SampleRegion& region,
                          double alpha, int pairs, std::uint64_t seed,
                          bool pairs_through_center = false);

// Least-squares slope of log-oscillation against log-scale at x0. Oscillation
// at scale s is the max of d_Y(f(x0), f(y)) over probes with d_X(x0, y) = s.
HolderFit local_holder_exponent(const MapDescriptor& f, const ConformalMetric& metric_in,
                                const ConformalMetric& metric_out, const ExtPoint& x0,
                                const std::vector<double>& scales, int probes_per_scale,
                                std::uint64_t seed);

// Estimate of Q_f(x) = limsup_{y->x} d_Y(f(x), f(y)) / d_X(x, y)^alpha:
// max over the given scales of the sampled oscillation ratio.
double q_estimate(const MapDescriptor& f, const ConformalMetric& metric_in,
                  const ConformalMetric& metric_out, const ExtPoint& x, double alpha,
                  const std::vector<double>& scales, int probes_per_scale, std::uint64_t seed);

}  // namespace qrlab
