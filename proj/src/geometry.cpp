#include "qrlab/geometry.hpp"

#include <sstream>

namespace qrlab {

std::string ExtPoint::to_string() const {
    if (inf_) return "inf";
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < n_; ++i) {
        if (i) os << ", ";
        os << c_[i];
    }
    os << ")";
    return os.str();
}

ExtPoint chart_swap(const ExtPoint& x) {
    const int n = x.dim();
    if (x.is_inf()) return ExtPoint::zero(n);
    const double m = x.norm();
    if (m == 0.0) return ExtPoint::infinity(n);
    // x/|x|^2 computed as (x/|x|)/|x| so that |x| near DBL_MAX stays finite.
    ExtPoint r(n);
    for (int i = 0; i < n; ++i) r[i] = (x[i] / m) / m;
    return r;
}

std::array<double, kMaxDim + 1> stereo_lift(const ExtPoint& x) {
    const int n = x.dim();
    std::array<double, kMaxDim + 1> X{};
    if (x.is_inf()) {
        X[n] = 1.0;
        return X;
    }
    const double m = x.norm();
    if (m <= 1.0) {
        const double d = 1.0 + m * m;
        for (int i = 0; i < n; ++i) X[i] = 2.0 * x[i] / d;
        X[n] = (m * m - 1.0) / d;
    } else {
        // Scale by 1/|x| first so |x| up to DBL_MAX causes no overflow.
        const double s = 1.0 / m;
        const double d = s * s + 1.0;
        for (int i = 0; i < n; ++i) X[i] = 2.0 * (x[i] * s) * s / d;
        X[n] = (1.0 - s * s) / d;
    }
    return X;
}

ExtPoint stereo_project(const std::array<double, kMaxDim + 1>& X, int n) {
    const double denom = 1.0 - X[n];
    if (denom <= 1e-280) return ExtPoint::infinity(n);
    ExtPoint x(n);
    for (int i = 0; i < n; ++i) x[i] = X[i] / denom;
    return x;
}

}  // namespace qrlab
