#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qrlab {

// Points live in the chart R^n of S^n = R^n u {inf}. Dimension is fixed per
// experiment, 2 <= n <= kMaxDim.
inline constexpr int kMaxDim = 8;

// Coordinates beyond this magnitude are handled through the chart swap
// x -> x/|x|^2 to keep spherical quantities finite.
inline constexpr double kChartSwapThreshold = 1e100;

class ExtPoint {
public:
    ExtPoint() = default;

    explicit ExtPoint(int n) : n_(n) {
        assert(n >= 1 && n <= kMaxDim);
        c_.fill(0.0);
    }

    ExtPoint(std::initializer_list<double> coords) : n_(static_cast<int>(coords.size())) {
        assert(n_ >= 1 && n_ <= kMaxDim);
        c_.fill(0.0);
        int i = 0;
        for (double v : coords) c_[i++] = v;
    }

    static ExtPoint infinity(int n) {
        ExtPoint p(n);
        p.inf_ = true;
        return p;
    }

    static ExtPoint zero(int n) { return ExtPoint(n); }

    // k-th standard basis vector scaled by s.
    static ExtPoint axis(int n, int k, double s = 1.0) {
        ExtPoint p(n);
        assert(k >= 0 && k < n);
        p.c_[k] = s;
        return p;
    }

    int dim() const { return n_; }
    bool is_inf() const { return inf_; }

    double operator[](int i) const {
        assert(!inf_ && i >= 0 && i < n_);
        return c_[i];
    }
    double& operator[](int i) {
        assert(!inf_ && i >= 0 && i < n_);
        return c_[i];
    }

    const double* data() const { return c_.data(); }

    // Euclidean norm, overflow-safe for coordinates up to DBL_MAX.
    double norm() const {
        assert(!inf_);
        double m = 0.0;
        for (int i = 0; i < n_; ++i) m = std::max(m, std::abs(c_[i]));
        if (m == 0.0) return 0.0;
        if (!std::isfinite(m)) return m;
        double s = 0.0;
        for (int i = 0; i < n_; ++i) {
            const double q = c_[i] / m;
            s += q * q;
        }
        return m * std::sqrt(s);
    }

    double norm_sq() const {
        assert(!inf_);
        double s = 0.0;
        for (int i = 0; i < n_; ++i) s += c_[i] * c_[i];
        return s;
    }

    bool finite_coords() const {
        if (inf_) return false;
        for (int i = 0; i < n_; ++i)
            if (!std::isfinite(c_[i])) return false;
        return true;
    }

    ExtPoint operator+(const ExtPoint& o) const {
        assert(!inf_ && !o.inf_ && n_ == o.n_);
        ExtPoint r(n_);
        for (int i = 0; i < n_; ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }

    ExtPoint operator-(const ExtPoint& o) const {
        assert(!inf_ && !o.inf_ && n_ == o.n_);
        ExtPoint r(n_);
        for (int i = 0; i < n_; ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }

    ExtPoint operator*(double s) const {
        assert(!inf_);
        ExtPoint r(n_);
        for (int i = 0; i < n_; ++i) r.c_[i] = c_[i] * s;
        return r;
    }

    ExtPoint operator-() const { return (*this) * -1.0; }

    friend ExtPoint operator*(double s, const ExtPoint& p) { return p * s; }

    double dot(const ExtPoint& o) const {
        assert(!inf_ && !o.inf_ && n_ == o.n_);
        double s = 0.0;
        for (int i = 0; i < n_; ++i) s += c_[i] * o.c_[i];
        return s;
    }

    bool operator==(const ExtPoint& o) const {
        if (n_ != o.n_ || inf_ != o.inf_) return false;
        if (inf_) return true;
        for (int i = 0; i < n_; ++i)
            if (c_[i] != o.c_[i]) return false;
        return true;
    }
    bool operator!=(const ExtPoint& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::array<double, kMaxDim> c_{};
    int n_ = 0;
    bool inf_ = false;
};

// Distance between u and v treating inf as a regular point of S^n only where
// callers say so; this is the plain Euclidean distance of chart points.
inline double euclid_dist(const ExtPoint& u, const ExtPoint& v) { return (u - v).norm(); }

// Chart swap x -> x/|x|^2 (the spherical isometry exchanging 0 and inf).
ExtPoint chart_swap(const ExtPoint& x);

// Stereographic lift of a chart point onto the unit sphere in R^{n+1};
// inf lifts to the north pole e_{n+1}.
std::array<double, kMaxDim + 1> stereo_lift(const ExtPoint& x);

// Inverse of stereo_lift. Lifted points within 1e-280 of the north pole in
// the last coordinate project to inf.
ExtPoint stereo_project(const std::array<double, kMaxDim + 1>& X, int n);

}  // namespace qrlab
