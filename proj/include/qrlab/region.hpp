#pragma once

#include <functional>
#include <limits>
#include <string>

#include "qrlab/geometry.hpp"

namespace qrlab {

// Domain descriptor: all of R^n, all of S^n, the open unit ball, the upper
// half-space {x_n > 0}, an open box, or a custom region given by a signed
// boundary-distance function (positive inside).
class Region {
public:
    enum class Kind { AllRn, SphereSn, UnitBall, HalfSpace, Box, Custom };

    static Region all_rn(int n) { return Region(Kind::AllRn, n); }
    static Region sphere_sn(int n) { return Region(Kind::SphereSn, n); }
    static Region unit_ball(int n) { return Region(Kind::UnitBall, n); }
    static Region half_space(int n) { return Region(Kind::HalfSpace, n); }
    static Region box(const ExtPoint& lo, const ExtPoint& hi) {
        Region r(Kind::Box, lo.dim());
        r.lo_ = lo;
        r.hi_ = hi;
        return r;
    }
    static Region custom(int n, std::function<double(const ExtPoint&)> signed_dist) {
        Region r(Kind::Custom, n);
        r.signed_dist_ = std::move(signed_dist);
        return r;
    }

    Kind kind() const { return kind_; }
    int dim() const { return n_; }

    // Signed Euclidean distance to the boundary; +inf when there is none.
    // inf as a chart point is inside only for SphereSn.
    double boundary_dist(const ExtPoint& x) const {
        const double inf = std::numeric_limits<double>::infinity();
        switch (kind_) {
            case Kind::AllRn:
                return x.is_inf() ? -inf : inf;
            case Kind::SphereSn:
                return inf;
            case Kind::UnitBall:
                return x.is_inf() ? -inf : 1.0 - x.norm();
            case Kind::HalfSpace:
                return x.is_inf() ? -inf : x[n_ - 1];
            case Kind::Box: {
                if (x.is_inf()) return -inf;
                double d = inf;
                for (int i = 0; i < n_; ++i) {
                    d = std::min(d, x[i] - lo_[i]);
                    d = std::min(d, hi_[i] - x[i]);
                }
                return d;
            }
            case Kind::Custom:
                return x.is_inf() ? -inf : signed_dist_(x);
        }
        return -inf;
    }

    bool contains(const ExtPoint& x) const { return boundary_dist(x) > 0.0; }

    // Whether the region is a proper subdomain of R^n (has a finite boundary),
    // which the quasihyperbolic metric requires.
    bool has_boundary() const { return kind_ != Kind::AllRn && kind_ != Kind::SphereSn; }

    std::string name() const {
        switch (kind_) {
            case Kind::AllRn: return "all";
            case Kind::SphereSn: return "sphere";
            case Kind::UnitBall: return "ball";
            case Kind::HalfSpace: return "halfspace";
            case Kind::Box: return "box";
            case Kind::Custom: return "custom";
        }
        return "?";
    }

    const ExtPoint& box_lo() const { return lo_; }
    const ExtPoint& box_hi() const { return hi_; }

private:
    Region(Kind k, int n) : kind_(k), n_(n), lo_(n), hi_(n) {}

    Kind kind_;
    int n_;
    ExtPoint lo_, hi_;
    std::function<double(const ExtPoint&)> signed_dist_;
};

}  // namespace qrlab
