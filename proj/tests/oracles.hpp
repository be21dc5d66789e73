// Test-only reference implementations, kept independent of the library code
// paths they are used to check.
#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "bcb/bicomplex.hpp"
#include "bcb/matrix.hpp"

namespace oracle {

inline double ulp_at(double scale) {
    const double mag = std::fabs(scale);
    if (mag == 0.0) return std::numeric_limits<double>::denorm_min();
    return std::ldexp(std::numeric_limits<double>::epsilon(), std::ilogb(mag));
}

/// |a - b| <= n ulps at the magnitude of the larger argument.
inline bool within_ulps(double a, double b, double n) {
    if (a == b) return true;
    return std::fabs(a - b) <= n * ulp_at(std::max(std::fabs(a), std::fabs(b)));
}

/// |a - b| <= n ulps at an explicitly given magnitude scale.
inline bool within_ulps_at(double a, double b, double scale, double n) {
    if (a == b) return true;
    return std::fabs(a - b) <= n * ulp_at(scale);
}

/// Euclidean norm straight from the four real components.
inline double quad_norm(const bcb::BiComplex& z) {
    return std::sqrt(z.x0() * z.x0() + z.x1() * z.x1() + z.x2() * z.x2() + z.x3() * z.x3());
}

/// Product by direct expansion of (z1 + j z2)(w1 + j w2).
inline bcb::BiComplex direct_product(const bcb::BiComplex& a, const bcb::BiComplex& b) {
    return {a.z1 * b.z1 - a.z2 * b.z2, a.z1 * b.z2 + a.z2 * b.z1};
}

/// Determinant by cofactor expansion along the first row (small n only).
inline bcb::Cx cofactor_determinant(const bcb::CxMatrix& m) {
    const int n = m.rows;
    if (n == 1) return m.at(0, 0);
    bcb::Cx det = 0.0;
    double sign = 1.0;
    for (int c = 0; c < n; ++c) {
        bcb::CxMatrix minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int col = 0;
            for (int j = 0; j < n; ++j) {
                if (j == c) continue;
                minor.at(i - 1, col++) = m.at(i, j);
            }
        }
        det += sign * m.at(0, c) * cofactor_determinant(minor);
        sign = -sign;
    }
    return det;
}

/// Monic complex polynomial with the given roots, ascending coefficients.
inline std::vector<bcb::Cx> poly_from_roots(const std::vector<bcb::Cx>& roots) {
    std::vector<bcb::Cx> coeffs{1.0};
    for (const bcb::Cx& r : roots) {
        std::vector<bcb::Cx> next(coeffs.size() + 1);
        for (size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= r * coeffs[i];
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

/// Power-sum evaluation (not Horner).
inline bcb::Cx eval_by_powers(const std::vector<bcb::Cx>& coeffs, const bcb::Cx& x) {
    bcb::Cx acc = 0.0;
    bcb::Cx power = 1.0;
    for (const bcb::Cx& c : coeffs) {
        acc += c * power;
        power *= x;
    }
    return acc;
}

/// Positive root of x^2 - b x - c (b, c >= 0, not both zero) in closed form.
inline double quadratic_positive_root(double b, double c) {
    return 0.5 * (b + std::sqrt(b * b + 4.0 * c));
}

}  // namespace oracle
