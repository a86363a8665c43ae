#pragma once

#include <cstdint>
#include <vector>

#include "qrlab/maps.hpp"

namespace qrlab {

// Default evidence threshold for the iterate-oscillation indicator. The
// spherical oscillation is capped at pi, so on a dyadic radius list the
// indicator cannot exceed pi / r_min^alpha; 64 sits between the saturation
// ceilings pi/2^-4 ~ 50.3 and pi/2^-5 ~ 100.5 of the default radius list at
// alpha = 1, separating on-Julia pixels from pixels a resolution step away.
inline constexpr double kDefaultJuliaThreshold = 64.0;

// Sampled L(x, f, r) = sup over sigma(y, x) = r of sigma(f(y), f(x)).
double L_value(const MapDescriptor& f, const ExtPoint& x, double r, int samples,
               std::uint64_t seed);

struct JuliaProbeRow {
    int m = 0;
    double r = 0.0;
    double L_hat = 0.0;
    double ratio = 0.0;  // L_hat / r^alpha
};

struct JuliaProbe {
    ExtPoint x;
    std::vector<JuliaProbeRow> table;  // complete over m_list x r_list
    double indicator = 0.0;            // max ratio over the table
    bool julia_evidence = false;
    double threshold = kDefaultJuliaThreshold;
};

// Theorem-style iterate indicator: max over the (m, r) grid of
// L(x, f^m, r) / r^alpha, with julia-evidence above the threshold.
JuliaProbe julia_indicator(const MapDescriptor& f, const ExtPoint& x, double alpha,
                           const std::vector<double>& r_list, const std::vector<int>& m_list,
                           int samples, std::uint64_t seed,
                           double threshold = kDefaultJuliaThreshold);

struct JuliaWindow {
    double x_min = -1.5, x_max = 1.5;
    double y_min = -1.5, y_max = 1.5;
};

struct JuliaGridConfig {
    JuliaWindow window;
    int width = 256, height = 256;
    double alpha = 1.0;
    std::vector<double> r_list;  // decreasing
    std::vector<int> m_list;     // increasing
    int samples = 24;
    double threshold = kDefaultJuliaThreshold;
    std::uint64_t seed = 1;
    // Pixels live on an axis-aligned 2-D slice of the chart: coordinates
    // axis_u/axis_v vary, the rest come from base (dim 2 uses the plane).
    int axis_u = 0, axis_v = 1;
    ExtPoint base = ExtPoint(2);
};

struct JuliaGrid {
    JuliaGridConfig config;
    std::vector<double> indicator;       // row-major, top row first
    std::vector<std::uint8_t> is_julia;  // classification by threshold

    ExtPoint pixel_center(int row, int col) const;
    int index(int row, int col) const { return row * config.width + col; }
};

// Per-pixel julia_indicator over the window; pixel seeds derive from
// (seed, pixel index) so the result is independent of scheduling.
JuliaGrid julia_grid(const MapDescriptor& f, const JuliaGridConfig& config);

// Serial reference implementation kept for testing the OpenMP kernel.
JuliaGrid julia_grid_serial(const MapDescriptor& f, const JuliaGridConfig& config);

}  // namespace qrlab
