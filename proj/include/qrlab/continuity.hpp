#pragma once

#include <cstdint>
#include <vector>

#include "qrlab/isometries.hpp"
#include "qrlab/maps.hpp"
#include "qrlab/metrics.hpp"

namespace qrlab {

enum class NormalityVerdict { NormalEvidence, NotNormalEvidence };

// Sampled modulus-of-continuity table for the isometry-translated family
// {f o A}. For Euclidean ranges the family is recentred, which leaves the
// measured oscillation |f(A(x)) - f(A(y))| unchanged.
struct ContinuityProfile {
    std::vector<double> deltas;     // decreasing
    std::vector<double> omega_hat;  // nonincreasing with delta by construction
    int samples = 0;
    int skipped = 0;  // (anchor, pair) draws that left the map's domain
    NormalityVerdict verdict = NormalityVerdict::NotNormalEvidence;
    double threshold = 0.0;  // omega_hat(delta_min) below this gave the verdict

    // Worst pair seen at the smallest delta, seeds for zalcman_rescale.
    ExtPoint defect_u, defect_v;
    double defect_value = 0.0;
};

// base (when nonempty) recentres the sampled pairs around that point instead
// of the origin of the sampler's space; verdicts should not depend on it.
ContinuityProfile continuity_profile(const MapDescriptor& f, const IsometrySampler& sampler,
                                     const ConformalMetric& metric_in,
                                     const ConformalMetric& metric_out,
                                     const std::vector<double>& deltas, int samples,
                                     std::uint64_t seed, double pair_window = 1.0,
                                     double threshold_factor = 1e-2, ExtPoint base = ExtPoint());

struct OrbitCompactness {
    bool bounded = false;
    int witness = -1;       // index of the escaping family member when unbounded
    double min_margin = 0.0;
    double max_margin = 0.0;
    double ratio_threshold = 0.0;
};

// Whether the sampled orbit {f(x0) : f in family} stays in a compact part of
// the range region. The margin of a value is its distance to the region's
// boundary, combined with 1/(1+|y|) when the region is unbounded; the orbit
// counts as escaping when the smallest margin drops below ratio_threshold
// times the largest.
OrbitCompactness orbit_compactness_probe(const std::vector<MapDescriptor>& family,
                                         const ExtPoint& x0, const Region& range_region,
                                         double ratio_threshold = 1e-2);

}  // namespace qrlab
