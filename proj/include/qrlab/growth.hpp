#pragma once

#include <cstdint>
#include <vector>

#include "qrlab/maps.hpp"

namespace qrlab {

struct GrowthSeries {
    std::vector<double> radii;
    std::vector<double> M;         // sampled sup_{|x|=r} |f(x)|
    std::vector<double> A;         // normalized spherical volume of f(B(x0, r))
    std::vector<double> A_stderr;  // Monte Carlo standard error
    double mu_hat = 0.0;           // order estimate, max tail ratio
    double lambda_hat = 0.0;       // lower order estimate, min tail ratio
    double omega_n = 0.0;          // surface measure of S^n
    bool ball_domain = false;      // log r replaced by log 1/(1-r)
    std::uint64_t seed = 0;
};

// Maximum modulus by sphere sampling (axis directions always included),
// A(x0, r) by Monte Carlo of 2^n J_f / (1 + |f|^2)^n over nested balls, and
// order/lower order from (n-1) loglog M(r) / log r over the upper tail of
// the radii (pole-free route). Throws numeric_error when more than 1% of the
// Jacobian evaluations fail.
GrowthSeries growth_suite(const MapDescriptor& f, const ExtPoint& x0,
                          const std::vector<double>& radii, int sphere_samples,
                          std::int64_t mc_samples, std::uint64_t seed);

// Serial reference implementation of the A(x0, r) Monte Carlo kernel, kept
// for testing the parallel path.
std::vector<double> spherical_average_serial(const MapDescriptor& f, const ExtPoint& x0,
                                             const std::vector<double>& radii,
                                             std::int64_t mc_samples, std::uint64_t seed);

}  // namespace qrlab
