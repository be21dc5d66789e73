#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bcb/bicomplex.hpp"
#include "bcb/matrix.hpp"

namespace bcb {

/// Complex polynomial, coefficients in ascending degree order.
struct CxPoly {
    std::vector<Cx> coeffs;

    CxPoly() = default;
    explicit CxPoly(std::vector<Cx> c) : coeffs(std::move(c)) {}

    /// Index of the last exactly nonzero coefficient; -1 when identically zero.
    int degree() const;
    bool identically_zero() const { return degree() < 0; }

    /// Horner evaluation over the stored coefficients.
    Cx operator()(const Cx& x) const;
};

/// Bicomplex polynomial, coefficients in ascending degree order. The stored
/// leading entry may be any value (including a zero divisor); degree() strips
/// exact zeros only.
struct BCPoly {
    std::vector<BiComplex> coeffs;

    BCPoly() = default;
    explicit BCPoly(std::vector<BiComplex> c) : coeffs(std::move(c)) {}

    int degree() const;
    bool identically_zero() const { return degree() < 0; }
    /// Coefficient at degree(). Throws ZeroDegreeError on the zero polynomial.
    BiComplex leading() const;
};

/// Coefficientwise idempotent decomposition P = f*e + g*e'.
std::pair<CxPoly, CxPoly> split_poly(const BCPoly& p);

/// Horner evaluation; agrees with compose_i(f(b1), g(b2)) of the split.
BiComplex evaluate(const BCPoly& p, const BiComplex& z);

/// Multiplies every coefficient by inverse(leading) and pins the leading
/// coefficient to exactly 1. Requires degree >= 1 and an invertible leading
/// coefficient (NonInvertibleLeadingError otherwise).
BCPoly normalize_monic(const BCPoly& p);

/// Companion matrix of a monic polynomial: superdiagonal ones, last row
/// (-A_0, ..., -A_{n-1}). Throws NotMonicError unless the leading coefficient
/// is exactly 1, ZeroDegreeError for degree < 1.
BCMatrix companion(const BCPoly& p);

/// Companion matrix conjugated by diag(1/d_1, ..., 1/d_n) with positive d:
/// superdiagonal d_{i+1}/d_i, last row -A_{i-1} d_i/d_n. Same spectrum as the
/// plain companion matrix.
BCMatrix scaled_companion(const BCPoly& p, std::span<const double> diag_scale);

/// Shape of a bicomplex polynomial's zero set, determined by the two split
/// components: both genuine polynomials (cross product of root sets), one
/// identically zero (that side's roots are all of C), or one a nonzero
/// constant (empty zero set).
enum class RootStructureKind {
    CrossProduct,
    FirstComponentFree,   ///< f == 0: roots are {any} * e + s2 * e'
    SecondComponentFree,  ///< g == 0: roots are s1 * e + {any} * e'
    NoRoots,
};

struct RootStructure {
    RootStructureKind kind = RootStructureKind::NoRoots;
    std::vector<Cx> component1;        ///< finite root multiset of f (empty when free)
    std::vector<Cx> component2;        ///< finite root multiset of g (empty when free)
    std::vector<BiComplex> combined;   ///< all compose_i pairs; CrossProduct only

    bool component1_free() const { return kind == RootStructureKind::FirstComponentFree; }
    bool component2_free() const { return kind == RootStructureKind::SecondComponentFree; }
};

/// External-interface name ("cross-product", "component1-free", ...).
const char* root_case_name(RootStructureKind kind);
RootStructureKind root_case_from_name(const std::string& name);

/// Assembles the root structure from the component root multisets (pass an
/// empty multiset for a side that is identically zero or constant). Inspects
/// the split of p to pick the structure; throws ZeroDegreeError on the zero
/// polynomial.
RootStructure classify_roots(const BCPoly& p, std::vector<Cx> s1, std::vector<Cx> s2);

/// Greedy nearest-neighbour multiset matching with per-pair tolerance
/// tol * max(1, |a|). Fails on size mismatch or any unmatched element.
bool roots_match(std::span<const Cx> a, std::span<const Cx> b, double tol);
bool roots_match(std::span<const BiComplex> a, std::span<const BiComplex> b, double tol);

}  // namespace bcb
