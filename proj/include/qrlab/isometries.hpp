#pragma once

#include <cstdint>
#include <vector>

#include "qrlab/maps.hpp"
#include "qrlab/metrics.hpp"
#include "qrlab/rng.hpp"

namespace qrlab {

// Generator of isometries from one of the three transitive families:
// Mobius self-maps of the hyperbolic ball, Euclidean translations, and
// spherical rotations. Produces A with A(0) = a for requested anchors.
class IsometrySampler {
public:
    enum class Space { HyperbolicBall, Translations, SphericalRotations };

    IsometrySampler(Space space, int n, std::uint64_t seed)
        : space_(space), n_(n), seed_(seed) {}

    Space space() const { return space_; }
    int dim() const { return n_; }
    std::uint64_t seed() const { return seed_; }

    // The metric the produced maps preserve.
    ConformalMetric metric() const {
        switch (space_) {
            case Space::HyperbolicBall: return ConformalMetric::hyperbolic_ball(n_);
            case Space::Translations: return ConformalMetric::euclidean(n_);
            case Space::SphericalRotations: return ConformalMetric::spherical(n_);
        }
        throw std::logic_error("unreachable");
    }

    MapDescriptor isometry_for_anchor(const ExtPoint& a) const;

    // One anchor from an externally owned stream: translations uniform in
    // [-window, window]^n, hyperbolic anchors with |a| <= anchor_radius,
    // spherical anchors anywhere on S^n.
    ExtPoint anchor_from(Rng& rng, double window, double anchor_radius) const;

    // count anchors from this sampler's own seed.
    std::vector<ExtPoint> random_anchors(int count) const;

    double window = 10.0;         // translation anchor box half-side
    double anchor_radius = 0.99;  // hyperbolic anchor |a| cap

private:
    Space space_;
    int n_;
    std::uint64_t seed_;
};

// One isometry per anchor: A(0) = a for ball/sphere, A(x) = x + a for
// translations.
std::vector<MapDescriptor> sample_isometries(const IsometrySampler& sampler,
                                             const std::vector<ExtPoint>& anchors);

}  // namespace qrlab
