#pragma once

#include <cstdint>
#include <vector>

#include "qrlab/maps.hpp"

namespace qrlab {

struct RescalingStep {
    int m = 0;              // expanding-window index the step came from
    ExtPoint x_m, y_m;      // defect pair, absolute coordinates
    double rho_m = 0.0;     // scale from rho^alpha = |x-y|^alpha / sigma(f(x), f(y))
    double sigma_fxfy = 0.0;
    double weighted_ratio = 0.0;
    // Nonconstancy certificate: two probe arguments whose rescaled images are
    // sigma-separated.
    ExtPoint cert_w1, cert_w2;
    double cert_sep = 0.0;
    bool nonconstant = false;
};

struct RescalingSequence {
    std::vector<RescalingStep> steps;  // rho strictly decreasing
    bool yosida_evidence = false;      // no defect pairs found
    double max_weighted_ratio = 0.0;
    double alpha = 0.0;
};

struct ZalcmanRefinement {
    int windows = 8;         // anchor windows of radius window_base * 2^m
    double window_base = 1.0;
    int stage1_samples = 4000;  // coarse (anchor, pair) draws per window
    int stage2_iters = 200;     // local refinement draws around the argmax
};

// Pang-Zalcman rescaling search for the translate family {f(x + a)}: per
// expanding anchor window, maximize (1 - |x|^2/r^2) sigma(f_a(x), f_a(y)) /
// |x - y|^alpha over sampled pairs in B(0, r_star), set the scale by the
// defining identity, and emit the rescaled map when the weighted ratio
// clears defect_threshold. An empty sequence is Yosida evidence.
RescalingSequence zalcman_rescale(const MapDescriptor& f, double alpha, double r_star,
                                  const ZalcmanRefinement& refine, std::uint64_t seed,
                                  double defect_threshold = 1e3);

// g_m(w) = f(x_m + rho_m w).
ExtPoint rescaled_eval(const MapDescriptor& f, const RescalingStep& step, const ExtPoint& w);

// Max of sigma(g(w1), g(w2)) - 2 |w1 - w2|^alpha over seeded probe pairs in
// B(0, probe_radius); nonpositive when the limit candidate obeys the
// 2 t^alpha Holder envelope.
double rescaled_holder_excess(const MapDescriptor& f, const RescalingStep& step, double alpha,
                              int pairs, double probe_radius, std::uint64_t seed);

}  // namespace qrlab
