#include "bcb/bicomplex.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "bcb/region.hpp"

namespace bcb {

BiComplex from_quad(double x0, double x1, double x2, double x3) {
    if (!std::isfinite(x0) || !std::isfinite(x1) || !std::isfinite(x2) || !std::isfinite(x3))
        throw std::invalid_argument("bicomplex components must be finite");
    return {Cx(x0, x1), Cx(x2, x3)};
}

std::ostream& operator<<(std::ostream& os, const BiComplex& z) {
    return os << '[' << z.x0() << ", " << z.x1() << ", " << z.x2() << ", " << z.x3() << ']';
}

Region Region::ball(const BiComplex& center, double r) {
    if (!(r >= 0.0) || !std::isfinite(r)) throw std::invalid_argument("ball radius must be finite and >= 0");
    Region out;
    out.kind = RegionKind::Ball;
    out.center = center;
    out.r1 = r;
    return out;
}

Region Region::discus(const BiComplex& center, double r1, double r2) {
    if (!(r1 >= 0.0) || !(r2 >= 0.0) || !std::isfinite(r1) || !std::isfinite(r2))
        throw std::invalid_argument("discus radii must be finite and >= 0");
    Region out;
    out.kind = RegionKind::Discus;
    out.center = center;
    out.r1 = r1;
    out.r2 = r2;
    return out;
}

Region Region::exterior_ball(const BiComplex& center, double r) {
    if (!(r >= 0.0) || !std::isfinite(r))
        throw std::invalid_argument("exterior radius must be finite and >= 0");
    Region out;
    out.kind = RegionKind::ExteriorBall;
    out.center = center;
    out.r1 = r;
    return out;
}

double discus_enclosing_ball(double r1, double r2) {
    if (!(r1 >= 0.0) || !(r2 >= 0.0)) throw std::invalid_argument("radii must be >= 0");
    return std::sqrt(0.5 * (r1 * r1 + r2 * r2));
}

bool region_contains(const Region& region, const BiComplex& z, double rel_tol, double abs_tol) {
    const auto slack = [&](double radius) { return rel_tol * radius + abs_tol; };
    switch (region.kind) {
        case RegionKind::Ball:
            return norm(z - region.center) <= region.r1 + slack(region.r1);
        case RegionKind::ExteriorBall:
            return norm(z - region.center) >= region.r1 - slack(region.r1);
        case RegionKind::Discus: {
            const IdemPair pz = decompose_i(z);
            const IdemPair pc = decompose_i(region.center);
            return std::abs(pz.b1 - pc.b1) <= region.r1 + slack(region.r1) &&
                   std::abs(pz.b2 - pc.b2) <= region.r2 + slack(region.r2);
        }
    }
    return false;
}

}  // namespace bcb
