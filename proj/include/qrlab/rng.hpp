#pragma once

#include <cstdint>
#include <cmath>

#include "qrlab/geometry.hpp"

namespace qrlab {

// Deterministic 64-bit generator (splitmix64). Every sampling operation in
// the library draws from one of these, seeded explicitly, so results are
// bit-reproducible. Per-task streams use derive_seed(seed, task_index).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [a, b).
    double uniform(double a, double b) { return a + (b - a) * next_double(); }

    // Log-uniform in [a, b], a, b > 0.
    double log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }

    // Standard normal via the polar method.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = uniform(-1.0, 1.0);
            v = uniform(-1.0, 1.0);
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    // Uniform direction on the unit sphere of R^n.
    ExtPoint unit_vector(int n) {
        ExtPoint d(n);
        double m;
        do {
            for (int i = 0; i < n; ++i) d[i] = gaussian();
            m = d.norm();
        } while (m < 1e-12);
        return d * (1.0 / m);
    }

    // Uniform in the Euclidean ball of the given radius.
    ExtPoint in_ball(int n, double radius) {
        const double r = radius * std::pow(next_double(), 1.0 / n);
        return unit_vector(n) * r;
    }

    // Uniform in the axis-aligned box [lo, hi]^n.
    ExtPoint in_box(int n, double lo, double hi) {
        ExtPoint p(n);
        for (int i = 0; i < n; ++i) p[i] = uniform(lo, hi);
        return p;
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Per-task seed derivation. Additive by contract so batch results do not
// depend on how the index range was partitioned.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t task_index) {
    return seed + task_index;
}

}  // namespace qrlab
