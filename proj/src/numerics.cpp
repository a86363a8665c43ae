#include "qrlab/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace qrlab {

double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    if (panels < 2) panels = 2;
    if (panels % 2) ++panels;
    const double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    LinearFit fit;
    const int n = static_cast<int>(x.size());
    fit.count = n;
    if (n < 2 || x.size() != y.size()) throw std::invalid_argument("fit_line: need >= 2 points");
    double mx = 0.0, my = 0.0;
    for (int i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double e = y[i] - (fit.intercept + fit.slope * x[i]);
        r2 += e * e;
    }
    fit.residual_rms = std::sqrt(r2 / n);
    return fit;
}

SmallMat SmallMat::identity(int n) {
    SmallMat m;
    m.n = n;
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

SmallMat SmallMat::diag(const std::vector<double>& d) {
    SmallMat m;
    m.n = static_cast<int>(d.size());
    for (int i = 0; i < m.n; ++i) m.at(i, i) = d[i];
    return m;
}

SmallMat SmallMat::transpose() const {
    SmallMat t;
    t.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.at(j, i) = at(i, j);
    return t;
}

SmallMat SmallMat::mul(const SmallMat& o) const {
    SmallMat r;
    r.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

ExtPoint SmallMat::apply(const ExtPoint& x) const {
    ExtPoint y(n);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += at(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

double SmallMat::det() const {
    SmallMat m = *this;
    double d = 1.0;
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(m.at(r, c)) > std::abs(m.at(p, c))) p = r;
        if (m.at(p, c) == 0.0) return 0.0;
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            const double f = m.at(r, c) / m.at(c, c);
            for (int j = c; j < n; ++j) m.at(r, j) -= f * m.at(c, j);
        }
    }
    return d;
}

std::array<double, kMaxDim> SmallMat::singular_values() const {
    // Cyclic Jacobi on the symmetric PSD matrix A^T A.
    SmallMat s = transpose().mul(*this);
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += s.at(i, j) * s.at(i, j);
        if (off < 1e-30 * (1.0 + std::abs(s.at(0, 0)))) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = s.at(p, q);
                if (apq == 0.0) continue;
                const double theta = (s.at(q, q) - s.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (int k = 0; k < n; ++k) {
                    const double skp = s.at(k, p), skq = s.at(k, q);
                    s.at(k, p) = c * skp - sn * skq;
                    s.at(k, q) = sn * skp + c * skq;
                }
                for (int k = 0; k < n; ++k) {
                    const double spk = s.at(p, k), sqk = s.at(q, k);
                    s.at(p, k) = c * spk - sn * sqk;
                    s.at(q, k) = sn * spk + c * sqk;
                }
            }
    }
    std::array<double, kMaxDim> sv{};
    for (int i = 0; i < n; ++i) sv[i] = std::sqrt(std::max(0.0, s.at(i, i)));
    std::sort(sv.begin(), sv.begin() + n, std::greater<double>());
    return sv;
}

double sphere_surface_measure(int n) {
    return 2.0 * std::pow(M_PI, 0.5 * (n + 1)) / std::tgamma(0.5 * (n + 1));
}

}  // namespace qrlab
