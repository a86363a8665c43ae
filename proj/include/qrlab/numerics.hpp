#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "qrlab/geometry.hpp"

namespace qrlab {

// Numeric failure distinct from domain/parameter misuse (exit code 3 in the CLI).
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Composite Simpson rule on [a, b] with panels subintervals (rounded up to even).
double simpson(const std::function<double(double)>& f, double a, double b, int panels);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual_rms = 0.0;  // root mean square residual of y about the fit
    int count = 0;
};

// Least-squares line through (x_i, y_i).
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Dense n x n matrix, n <= kMaxDim. Enough linear algebra for Jacobians of
// the map zoo; not a general-purpose library.
struct SmallMat {
    int n = 0;
    std::array<double, kMaxDim * kMaxDim> a{};

    double& at(int i, int j) { return a[i * n + j]; }
    double at(int i, int j) const { return a[i * n + j]; }

    static SmallMat identity(int n);
    static SmallMat diag(const std::vector<double>& d);

    SmallMat transpose() const;
    SmallMat mul(const SmallMat& o) const;
    ExtPoint apply(const ExtPoint& x) const;

    // Determinant by Gaussian elimination with partial pivoting.
    double det() const;

    // Singular values in decreasing order, via cyclic Jacobi on A^T A.
    std::array<double, kMaxDim> singular_values() const;
};

// Surface measure of the unit n-sphere in R^{n+1}: 2 pi^{(n+1)/2} / Gamma((n+1)/2).
double sphere_surface_measure(int n);

}  // namespace qrlab
