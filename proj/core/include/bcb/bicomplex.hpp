#pragma once

#include <cmath>
#include <complex>
#include <iosfwd>

#include "bcb/errors.hpp"

namespace bcb {

/// Complex scalar over the first imaginary unit i.
using Cx = std::complex<double>;

/// Idempotent projections (b1, b2) of a bicomplex number, Z = b1*e + b2*e'.
/// Also reused for the second idempotent representation, where each entry is
/// a pair of reals (real part, j-coefficient).
struct IdemPair {
    Cx b1{};
    Cx b2{};
};

/// Componentwise moduli (|b1|, |b2|) of the idempotent projections.
struct HypModulus {
    double m1 = 0.0;
    double m2 = 0.0;
};

/// Bicomplex number Z = z1 + j*z2 with complex z1, z2 and commuting imaginary
/// units: i^2 = j^2 = -1, k = ij, k^2 = +1.
///
/// The ring has zero divisors. The idempotents e = (1+ij)/2 and e' = (1-ij)/2
/// satisfy e^2 = e, e'^2 = e', e*e' = 0 and e + e' = 1; every Z decomposes
/// uniquely as b1*e + b2*e' with b1 = z1 - i*z2, b2 = z1 + i*z2, and
/// multiplication acts componentwise in that basis. The canonical stored form
/// is (z1, z2); the projections are computed on demand.
struct BiComplex {
    Cx z1{};  ///< span of 1 and i
    Cx z2{};  ///< span of j and k (Z = z1 + j*z2)

    constexpr BiComplex() = default;
    constexpr BiComplex(double x) : z1(x), z2(0.0) {}
    constexpr BiComplex(const Cx& a) : z1(a), z2(0.0) {}
    constexpr BiComplex(const Cx& a, const Cx& b) : z1(a), z2(b) {}

    static constexpr BiComplex zero() { return {}; }
    static constexpr BiComplex one() { return {1.0}; }
    static BiComplex unit_i() { return {Cx(0.0, 1.0), Cx(0.0, 0.0)}; }
    static BiComplex unit_j() { return {Cx(0.0, 0.0), Cx(1.0, 0.0)}; }
    static BiComplex unit_k() { return {Cx(0.0, 0.0), Cx(0.0, 1.0)}; }
    /// e = (1 + ij)/2, the idempotent picking out the first projection.
    static BiComplex idem_e() { return {Cx(0.5, 0.0), Cx(0.0, 0.5)}; }
    /// e' = (1 - ij)/2, the complementary idempotent.
    static BiComplex idem_e_dagger() { return {Cx(0.5, 0.0), Cx(0.0, -0.5)}; }

    double x0() const { return z1.real(); }
    double x1() const { return z1.imag(); }
    double x2() const { return z2.real(); }
    double x3() const { return z2.imag(); }

    bool is_zero() const { return z1 == 0.0 && z2 == 0.0; }

    friend bool operator==(const BiComplex& a, const BiComplex& b) {
        return a.z1 == b.z1 && a.z2 == b.z2;
    }
    friend bool operator!=(const BiComplex& a, const BiComplex& b) { return !(a == b); }
};

/// Builds x0 + i*x1 + j*x2 + k*x3. Rejects non-finite input.
BiComplex from_quad(double x0, double x1, double x2, double x3);

inline BiComplex operator+(const BiComplex& a, const BiComplex& b) {
    return {a.z1 + b.z1, a.z2 + b.z2};
}

inline BiComplex operator-(const BiComplex& a, const BiComplex& b) {
    return {a.z1 - b.z1, a.z2 - b.z2};
}

inline BiComplex operator-(const BiComplex& a) { return {-a.z1, -a.z2}; }

/// First idempotent decomposition: (z1 - i*z2, z1 + i*z2).
inline IdemPair decompose_i(const BiComplex& z) {
    const Cx iz2(-z.z2.imag(), z.z2.real());  // i*z2, exact
    return {z.z1 - iz2, z.z1 + iz2};
}

/// Inverse of decompose_i: z1 = (b1 + b2)/2, z2 = i*(b1 - b2)/2.
inline BiComplex compose_i(const IdemPair& p) {
    const Cx s = p.b1 + p.b2;
    const Cx d = p.b1 - p.b2;
    return {Cx(0.5 * s.real(), 0.5 * s.imag()), Cx(-0.5 * d.imag(), 0.5 * d.real())};
}

/// Second idempotent decomposition. With w1 = x0 + j*x2 and w2 = x1 + j*x3
/// (both complex over j), returns (w1 - j*w2, w1 + j*w2); each entry is stored
/// as (real part, j-coefficient).
inline IdemPair decompose_j(const BiComplex& z) {
    const double x0 = z.z1.real(), x1 = z.z1.imag();
    const double x2 = z.z2.real(), x3 = z.z2.imag();
    return {Cx(x0 + x3, x2 - x1), Cx(x0 - x3, x2 + x1)};
}

/// Inverse of decompose_j.
inline BiComplex compose_j(const IdemPair& g) {
    const Cx s = g.b1 + g.b2;
    const Cx d = g.b1 - g.b2;
    // w1 = s/2, w2 = j*d/2 over the unit j
    const double x0 = 0.5 * s.real(), x2 = 0.5 * s.imag();
    const double x1 = -0.5 * d.imag(), x3 = 0.5 * d.real();
    return {Cx(x0, x1), Cx(x2, x3)};
}

/// Product acts componentwise in the idempotent basis.
inline BiComplex operator*(const BiComplex& a, const BiComplex& b) {
    const IdemPair pa = decompose_i(a);
    const IdemPair pb = decompose_i(b);
    return compose_i({pa.b1 * pb.b1, pa.b2 * pb.b2});
}

inline BiComplex operator*(const BiComplex& a, double s) { return {a.z1 * s, a.z2 * s}; }
inline BiComplex operator*(double s, const BiComplex& a) { return a * s; }
inline BiComplex operator*(const BiComplex& a, const Cx& c) { return {a.z1 * c, a.z2 * c}; }
inline BiComplex operator*(const Cx& c, const BiComplex& a) { return a * c; }

inline BiComplex& operator+=(BiComplex& a, const BiComplex& b) { return a = a + b; }
inline BiComplex& operator-=(BiComplex& a, const BiComplex& b) { return a = a - b; }
inline BiComplex& operator*=(BiComplex& a, const BiComplex& b) { return a = a * b; }

/// Euclidean norm sqrt(|z1|^2 + |z2|^2); equals sqrt((|b1|^2 + |b2|^2)/2) in
/// either idempotent representation. Submultiplicative only up to sqrt(2).
inline double norm(const BiComplex& z) {
    return std::sqrt(std::norm(z.z1) + std::norm(z.z2));
}

/// Componentwise moduli of the idempotent projections.
inline HypModulus hyp_modulus(const BiComplex& z) {
    const IdemPair p = decompose_i(z);
    return {std::abs(p.b1), std::abs(p.b2)};
}

/// True iff both idempotent projections are (exactly) nonzero. Nonzero values
/// with exactly one zero projection are zero divisors.
inline bool is_invertible(const BiComplex& z) {
    const IdemPair p = decompose_i(z);
    return p.b1 != 0.0 && p.b2 != 0.0;
}

/// Componentwise reciprocal in the idempotent basis.
/// Throws ZeroDivisorError when z is zero or a zero divisor.
inline BiComplex inverse(const BiComplex& z) {
    const IdemPair p = decompose_i(z);
    if (p.b1 == 0.0 || p.b2 == 0.0)
        throw ZeroDivisorError("bicomplex inverse: zero or zero divisor");
    return compose_i({1.0 / p.b1, 1.0 / p.b2});
}

std::ostream& operator<<(std::ostream& os, const BiComplex& z);

}  // namespace bcb
