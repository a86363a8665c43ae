#include "qrlab/sphere_rotation.hpp"

#include <cmath>

namespace qrlab {

SphereRotation::SphereRotation(int n) : n_(n) {
    for (int i = 0; i <= n; ++i) at(i, i) = 1.0;
}

SphereRotation SphereRotation::taking_to_zero(const ExtPoint& p) {
    const int n = p.dim();
    SphereRotation rot(n);
    const auto A = stereo_lift(p);
    // Target: south pole -e_{n+1}.
    std::array<double, kMaxDim + 1> B{};
    B[n] = -1.0;

    double c = 0.0;
    for (int i = 0; i <= n; ++i) c += A[i] * B[i];

    if (c <= -1.0 + 1e-14) {
        // p is (numerically) inf: rotate by pi in the (e_1, e_{n+1}) plane.
        rot.at(0, 0) = -1.0;
        rot.at(n, n) = -1.0;
        return rot;
    }

    // R(x) = x - (<a,x> + <b,x>)(a + b)/(1 + <a,b>) + 2 <a,x> b maps a to b,
    // identity on the orthogonal complement of span{a, b}.
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            double v = (i == j) ? 1.0 : 0.0;
            v -= (A[i] + B[i]) * (A[j] + B[j]) / (1.0 + c);
            v += 2.0 * B[i] * A[j];
            rot.at(i, j) = v;
        }
    return rot;
}

ExtPoint SphereRotation::apply(const ExtPoint& x) const {
    const auto X = stereo_lift(x);
    std::array<double, kMaxDim + 1> Y{};
    for (int i = 0; i <= n_; ++i) {
        double s = 0.0;
        for (int j = 0; j <= n_; ++j) s += at(i, j) * X[j];
        Y[i] = s;
    }
    return stereo_project(Y, n_);
}

SphereRotation SphereRotation::inverse() const {
    SphereRotation inv(n_);
    for (int i = 0; i <= n_; ++i)
        for (int j = 0; j <= n_; ++j) inv.at(i, j) = at(j, i);
    return inv;
}

}  // namespace qrlab
