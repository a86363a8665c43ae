#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "qrlab/geometry.hpp"
#include "qrlab/numerics.hpp"
#include "qrlab/region.hpp"
#include "qrlab/sphere_rotation.hpp"

namespace qrlab {

// An evaluatable quasiregular map with its metadata. Value type; composite
// kinds hold shared immutable children.
class MapDescriptor {
public:
    enum class Kind {
        Identity,
        RadialPower,      // x |x|^{t-1}
        Zorich,           // beam {|a|,|b| < pi/2} -> upper half-space, n = 3
        ZorichInverse,    // upper half-space -> beam
        ZorichBloch,      // Z^{-1}(x + e_3) on the unit ball
        PlanarPolynomial, // complex polynomial, ascending coefficients
        PlanarExp,        // e^z
        PlanarExpExp,     // e^{e^z}
        LinearDiag,       // x -> diag(d) x (the planar K-stretch for n = 2)
        QcConjugate,      // psi o f o psi^{-1}, psi a diagonal stretch
        MobiusBall,       // conformal self-map of the ball with phi(0) = a
        MobiusBallToHalfSpace,
        SphericalRotation,
        Translation,
        Constant,
        PiecewiseLinearStretch,  // the (p_m(x), y) family on (-1,1)^2
        Compose,                 // outer o inner
        PostOffset,              // f(x) + offset
    };

    Kind kind() const { return kind_; }
    int dim() const { return n_; }
    double maximal_dilatation() const { return K_; }
    // Guaranteed local Holder exponent K^{1/(1-n)}, derived from the stored K.
    double holder_exponent() const { return std::pow(K_, 1.0 / (1.0 - n_)); }
    const Region& domain() const { return domain_; }
    const Region& range() const { return range_; }
    const std::vector<ExtPoint>& poles() const { return poles_; }
    bool fixes_infinity() const { return fixes_inf_; }
    // Whether orbits are defined (range contained in domain up to chart swap).
    bool iterable() const { return iterable_; }

    ExtPoint eval(const ExtPoint& x) const;

    std::string kind_name() const;

    // -- constructors (free functions below are the public surface) --
    static MapDescriptor make(Kind kind, int n);

    double param_t = 0.0;                   // RadialPower exponent, PiecewiseLinearStretch m
    std::vector<std::complex<double>> coeffs;  // PlanarPolynomial
    std::vector<double> diag;               // LinearDiag / QcConjugate stretch
    ExtPoint anchor;                        // MobiusBall a, Translation/PostOffset vector
    std::shared_ptr<const SphereRotation> rotation;
    std::shared_ptr<const MapDescriptor> base;   // QcConjugate / Compose outer
    std::shared_ptr<const MapDescriptor> inner;  // Compose inner

    void set_dilatation(double K) { K_ = K; }

private:
    MapDescriptor(Kind k, int n) : anchor(n), kind_(k), n_(n),
                                   domain_(Region::all_rn(n)), range_(Region::all_rn(n)) {}

    Kind kind_;
    int n_;
    double K_ = 1.0;
    Region domain_, range_;
    std::vector<ExtPoint> poles_;
    bool fixes_inf_ = false;
    bool iterable_ = false;

    friend MapDescriptor identity_map(int);
    friend MapDescriptor radial_power(double, int);
    friend MapDescriptor zorich();
    friend MapDescriptor zorich_inverse_map();
    friend MapDescriptor zorich_bloch();
    friend MapDescriptor planar_polynomial(std::vector<std::complex<double>>);
    friend MapDescriptor planar_exp();
    friend MapDescriptor planar_exp_exp();
    friend MapDescriptor linear_diag(std::vector<double>);
    friend MapDescriptor qc_conjugate(const MapDescriptor&, const std::vector<double>&);
    friend MapDescriptor mobius_ball_isometry(const ExtPoint&);
    friend MapDescriptor mobius_ball_to_half_space(int);
    friend MapDescriptor spherical_isometry_to_zero(const ExtPoint&);
    friend MapDescriptor spherical_rotation_map(const SphereRotation&);
    friend MapDescriptor translation_map(const ExtPoint&);
    friend MapDescriptor constant_map(const ExtPoint&);
    friend MapDescriptor piecewise_linear_stretch(int);
    friend MapDescriptor compose_maps(const MapDescriptor&, const MapDescriptor&);
    friend MapDescriptor post_offset(const MapDescriptor&, const ExtPoint&);
};

MapDescriptor identity_map(int n);

// f_t(x) = x |x|^{t-1}; K = max(t, 1/t)^{n-1}.
MapDescriptor radial_power(double t, int n);

// Zorich map on the beam {|a| < pi/2, |b| < pi/2} in R^3:
// Z(a,b,c) = e^c h(v(a,b)) with v the radial square-to-disk map onto the
// disk of radius pi/2 and h the hemisphere lift. |Z(a,b,c)| = e^c exactly.
MapDescriptor zorich();
MapDescriptor zorich_inverse_map();
ExtPoint zorich_inverse(const ExtPoint& p);

// f(x) = Z^{-1}(x + (0,0,1)) on the unit ball of R^3.
MapDescriptor zorich_bloch();

// Complex polynomial with ascending coefficients; n = 2.
MapDescriptor planar_polynomial(std::vector<std::complex<double>> coeffs);
MapDescriptor planar_exp();
MapDescriptor planar_exp_exp();

// x -> diag(d) x. For n = 2, diag(K, 1) is the K-quasiconformal stretch.
MapDescriptor linear_diag(std::vector<double> d);

// psi o f o psi^{-1} with psi = diag(stretch); declared K = K(psi)^2 K(f).
MapDescriptor qc_conjugate(const MapDescriptor& base, const std::vector<double>& stretch);

// Conformal self-map of the unit ball with phi(0) = a (Mobius addition).
MapDescriptor mobius_ball_isometry(const ExtPoint& a);

// Surjective Mobius map from the unit ball onto the upper half-space.
MapDescriptor mobius_ball_to_half_space(int n);

// Spherical isometry with A(p) = 0, built from a rotation of the embedded
// sphere conjugated by stereographic projection.
MapDescriptor spherical_isometry_to_zero(const ExtPoint& p);
MapDescriptor spherical_rotation_map(const SphereRotation& rot);

MapDescriptor translation_map(const ExtPoint& a);
MapDescriptor constant_map(const ExtPoint& value);

// The piecewise-linear family (p_m(x), y) on (-1,1)^2, m >= 2.
MapDescriptor piecewise_linear_stretch(int m);

MapDescriptor compose_maps(const MapDescriptor& outer, const MapDescriptor& inner);
MapDescriptor post_offset(const MapDescriptor& f, const ExtPoint& offset);

// f^m(x); |f^k| over 1e300 overflows to inf and continues through the chart.
ExtPoint orbit(const MapDescriptor& map, const ExtPoint& x, int m);

struct DistortionSample {
    SmallMat jacobian;
    double jacobian_det = 0.0;
    double opnorm = 0.0;   // |f'(x)|
    double minnorm = 0.0;  // l(f'(x)) = inf_{|h|=1} |f'(x) h|
    double K_O = 0.0;      // |f'|^n / J_f
    double K_I = 0.0;      // J_f / l^n
};

// Central-difference Jacobian with singular values; h <= 0 picks the default
// 1e-5 max(1, |x|).
DistortionSample numeric_jacobian(const MapDescriptor& map, const ExtPoint& x, double h = 0.0);

}  // namespace qrlab
