#pragma once

#include <array>

#include "qrlab/geometry.hpp"

namespace qrlab {

// Orthogonal rotation of the embedded unit sphere in R^{n+1}, conjugated by
// stereographic projection. Exact spherical isometry up to rounding.
class SphereRotation {
public:
    // Identity on S^n.
    explicit SphereRotation(int n);

    // Rotation taking chart point p to 0 (the south pole upstairs).
    static SphereRotation taking_to_zero(const ExtPoint& p);

    ExtPoint apply(const ExtPoint& x) const;

    SphereRotation inverse() const;

    int dim() const { return n_; }

private:
    int n_;
    // Row-major (n+1) x (n+1).
    std::array<double, (kMaxDim + 1) * (kMaxDim + 1)> m_{};

    double& at(int i, int j) { return m_[i * (n_ + 1) + j]; }
    double at(int i, int j) const { return m_[i * (n_ + 1) + j]; }
};

}  // namespace qrlab
