#include "qrlab/julia.hpp"

#include <cmath>

#include "qrlab/metrics.hpp"
#include "qrlab/parallel.hpp"
#include "qrlab/rng.hpp"

namespace qrlab {

double L_value(const MapDescriptor& f, const ExtPoint& x, double r, int samples,
               std::uint64_t seed) {
    if (samples < 8) throw std::invalid_argument("L_value: samples >= 8 required");
    if (!(r > 0.0) || r >= M_PI) throw std::invalid_argument("L_value: r in (0, pi) required");
    const auto sphere = ConformalMetric::spherical(f.dim());
    const ExtPoint fx = f.eval(x);
    double m = 0.0;
    for (const auto& y : sphere.sphere_sample(x, r, samples, seed))
        m = std::max(m, dist_spherical(f.eval(y), fx));
    return m;
}

JuliaProbe julia_indicator(const MapDescriptor& f, const ExtPoint& x, double alpha,
                           const std::vector<double>& r_list, const std::vector<int>& m_list,
                           int samples, std::uint64_t seed, double threshold) {
    if (r_list.empty() || m_list.empty())
        throw std::invalid_argument("julia_indicator: r_list and m_list required");
    for (size_t i = 1; i < r_list.size(); ++i)
        if (r_list[i] >= r_list[i - 1])
            throw std::invalid_argument("julia_indicator: r_list must decrease");
    for (size_t i = 1; i < m_list.size(); ++i)
        if (m_list[i] <= m_list[i - 1])
            throw std::invalid_argument("julia_indicator: m_list must increase");
    if (!f.iterable()) throw std::invalid_argument("julia_indicator: map is not iterable");

    const auto sphere = ConformalMetric::spherical(f.dim());
    const int m_max = m_list.back();
    const bool inf_absorbing = f.fixes_infinity();

    JuliaProbe probe;
    probe.x = x;
    probe.threshold = threshold;

    // Orbit of the center, then the orbit of every circle sample; the
    // oscillation at iterate m is read off both orbits in one pass.
    std::vector<ExtPoint> ox;
    ox.reserve(m_max + 1);
    ox.push_back(x);
    for (int m = 1; m <= m_max; ++m) ox.push_back(orbit(f, ox.back(), 1));

    Rng seed_stream(seed);
    for (size_t ri = 0; ri < r_list.size(); ++ri) {
        const double r = r_list[ri];
        std::vector<double> L(m_list.size(), 0.0);
        const auto ys = sphere.sphere_sample(x, r, samples, seed_stream.next_u64());
        for (const auto& y0 : ys) {
            ExtPoint y = y0;
            size_t next = 0;
            for (int m = 1; m <= m_max && next < m_list.size(); ++m) {
                y = orbit(f, y, 1);
                // Once both orbits sit at a fixed inf, every later
                // oscillation vanishes.
                if (inf_absorbing && y.is_inf() && ox[m].is_inf()) break;
                if (m == m_list[next]) {
                    L[next] = std::max(L[next], dist_spherical(y, ox[m]));
                    ++next;
                }
            }
        }
        for (size_t mi = 0; mi < m_list.size(); ++mi) {
            JuliaProbeRow row;
            row.m = m_list[mi];
            row.r = r;
            row.L_hat = L[mi];
            row.ratio = L[mi] / std::pow(r, alpha);
            probe.indicator = std::max(probe.indicator, row.ratio);
            probe.table.push_back(row);
        }
    }
    probe.julia_evidence = probe.indicator > threshold;
    return probe;
}

ExtPoint JuliaGrid::pixel_center(int row, int col) const {
    const double dx = (config.window.x_max - config.window.x_min) / config.width;
    const double dy = (config.window.y_max - config.window.y_min) / config.height;
    ExtPoint p = config.base;
    p[config.axis_u] = config.window.x_min + (col + 0.5) * dx;
    p[config.axis_v] = config.window.y_max - (row + 0.5) * dy;  // top row first
    return p;
}

namespace {

JuliaGrid grid_common(const MapDescriptor& f, const JuliaGridConfig& config, bool parallel) {
    if (config.width < 16 || config.height < 16)
        throw std::invalid_argument("julia_grid: resolution >= 16x16 required");
    JuliaGrid grid;
    grid.config = config;
    if (grid.config.base.dim() != f.dim())
        throw std::invalid_argument("julia_grid: slice base dimension mismatch");
    const std::int64_t pixels = static_cast<std::int64_t>(config.width) * config.height;
    grid.indicator.assign(pixels, 0.0);
    grid.is_julia.assign(pixels, 0);

    const auto body = [&](std::int64_t p) {
        const int row = static_cast<int>(p) / config.width;
        const int col = static_cast<int>(p) % config.width;
        const JuliaProbe probe =
            julia_indicator(f, grid.pixel_center(row, col), config.alpha, config.r_list,
                            config.m_list, config.samples,
                            derive_seed(config.seed, static_cast<std::uint64_t>(p)),
                            config.threshold);
        grid.indicator[p] = probe.indicator;
        grid.is_julia[p] = probe.julia_evidence ? 1 : 0;
    };

    if (parallel) {
        parallel_for(pixels, body);
    } else {
        for (std::int64_t p = 0; p < pixels; ++p) body(p);
    }
    return grid;
}

}  // namespace

JuliaGrid julia_grid(const MapDescriptor& f, const JuliaGridConfig& config) {
    return grid_common(f, config, true);
}

JuliaGrid julia_grid_serial(const MapDescriptor& f, const JuliaGridConfig& config) {
    return grid_common(f, config, false);
}

}  // namespace qrlab
