#include "qrlab/isometries.hpp"

#include "qrlab/rng.hpp"

namespace qrlab {

MapDescriptor IsometrySampler::isometry_for_anchor(const ExtPoint& a) const {
    switch (space_) {
        case Space::HyperbolicBall:
            if (a.is_inf() || a.norm() >= 1.0)
                throw std::domain_error("isometry_for_anchor: anchor outside the unit ball");
            return mobius_ball_isometry(a);
        case Space::Translations:
            if (a.is_inf()) throw std::domain_error("isometry_for_anchor: finite anchor required");
            return translation_map(a);
        case Space::SphericalRotations:
            // Rotation with A(0) = a: invert the rotation taking a to 0.
            return spherical_rotation_map(SphereRotation::taking_to_zero(a).inverse());
    }
    throw std::logic_error("unreachable");
}

ExtPoint IsometrySampler::anchor_from(Rng& rng, double window_arg, double anchor_radius_arg) const {
    switch (space_) {
        case Space::HyperbolicBall: {
            // Uniform in hyperbolic radius so anchors crowd the boundary.
            const double rho_max = dist_hyperbolic(ExtPoint::zero(n_),
                                                   ExtPoint::axis(n_, 0, anchor_radius_arg));
            const double rho = rng.uniform(0.0, rho_max);
            return rng.unit_vector(n_) * std::tanh(rho / 2.0);
        }
        case Space::Translations:
            return rng.in_box(n_, -window_arg, window_arg);
        case Space::SphericalRotations: {
            // Chart point with spherical cap measure: |a| = tan(theta/2).
            const double theta = std::acos(rng.uniform(-1.0, 1.0));
            return rng.unit_vector(n_) * std::tan(theta / 2.0);
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<ExtPoint> IsometrySampler::random_anchors(int count) const {
    Rng rng(seed_);
    std::vector<ExtPoint> anchors;
    anchors.reserve(count);
    for (int i = 0; i < count; ++i) anchors.push_back(anchor_from(rng, window, anchor_radius));
    return anchors;
}

std::vector<MapDescriptor> sample_isometries(const IsometrySampler& sampler,
                                             const std::vector<ExtPoint>& anchors) {
    std::vector<MapDescriptor> out;
    out.reserve(anchors.size());
    for (const auto& a : anchors) out.push_back(sampler.isometry_for_anchor(a));
    return out;
}

}  // namespace qrlab
