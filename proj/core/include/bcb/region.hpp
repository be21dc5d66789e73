#pragma once

#include <cmath>

#include "bcb/bicomplex.hpp"

namespace bcb {

enum class RegionKind {
    Ball,          ///< |Z - center| <= r
    Discus,        ///< |b1 - c1| <= r1 and |b2 - c2| <= r2 (idempotent components)
    ExteriorBall,  ///< |Z - center| >= r (lower bound on the distance)
};

/// A localization region for bicomplex values. Balls use the Euclidean norm;
/// a discus constrains the two idempotent projections independently.
struct Region {
    RegionKind kind = RegionKind::Ball;
    BiComplex center{};
    double r1 = 0.0;  ///< ball/exterior radius, or first discus radius
    double r2 = 0.0;  ///< second discus radius (unused for balls)

    static Region ball(const BiComplex& center, double r);
    static Region discus(const BiComplex& center, double r1, double r2);
    static Region exterior_ball(const BiComplex& center, double r);

    /// Radius of the smallest Euclidean ball containing the region
    /// (the region's own radius for balls).
    double enclosing_radius() const {
        if (kind == RegionKind::Discus) return std::sqrt(0.5 * (r1 * r1 + r2 * r2));
        return r1;
    }
};

/// Euclidean radius of the ball enclosing a discus of radii (r1, r2):
/// sqrt((r1^2 + r2^2)/2).
double discus_enclosing_ball(double r1, double r2);

/// Closed membership test with slack rel_tol*radius + abs_tol per comparison,
/// so numerically computed points sitting on a boundary are admitted. For
/// ExteriorBall the test is |Z - center| >= r - slack.
bool region_contains(const Region& region, const BiComplex& z, double rel_tol = 1e-9,
                     double abs_tol = 1e-12);

}  // namespace bcb
