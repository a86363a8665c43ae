#pragma once

#include <cstdint>
#include <vector>

#include "qrlab/maps.hpp"

namespace qrlab {

struct LittleBlochPoint {
    double level = 0.0;  // |x| of the probed center
    double diam = 0.0;   // sampled diam f(B_rho(x, ball_radius)) at the axis center
};

struct BlochStats {
    double R_hat = 0.0;    // |f(0)| + sup over sampled centers of the sampled diameter
    double f0_norm = 0.0;
    double sup_diam = 0.0;
    std::vector<LittleBlochPoint> little_bloch_curve;  // probed along the -e_n axis family
    double bloch_radius_probe = 0.0;  // largest verified injective-image ball radius found
    double ball_radius = 1.0;         // hyperbolic radius of the probed balls
    std::uint64_t seed = 0;
};

// Bloch statistics of f on the unit ball with Euclidean range. centers are
// drawn at the requested |x| levels in random directions (plus the -e_n axis
// center per level, which drives little_bloch_curve). The radius of the
// hyperbolic balls is 1 by default and exposed as a parameter.
BlochStats bloch_R(const MapDescriptor& f, int centers,
                   const std::vector<double>& boundary_approach, int ball_samples,
                   std::uint64_t seed, double ball_radius = 1.0);

struct GrowthBoundRow {
    double r = 0.0;
    double M = 0.0;      // sampled sup_{|x|=r} |f(x)|
    double bound = 0.0;  // R_hat * max(1, log((1+r)/(1-r)))
    bool pass = false;
};

// Per-radius comparison of the sampled maximum modulus against the Bloch
// growth bound, with multiplicative slack.
std::vector<GrowthBoundRow> bloch_growth_check(const MapDescriptor& f,
                                               const std::vector<double>& radii,
                                               const BlochStats& stats, int sphere_samples,
                                               std::uint64_t seed, double slack = 1.05);

}  // namespace qrlab
