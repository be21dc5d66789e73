#pragma once

#include <vector>

#include "bcb/matrix.hpp"
#include "bcb/polynomial.hpp"
#include "bcb/roots.hpp"

namespace bcb {

/// Largest matrix size accepted by the eigenvalue routines.
inline constexpr int kMaxEigenSize = 12;

/// Monic characteristic polynomial (ascending coefficients) by the
/// Faddeev-LeVerrier trace recurrence.
CxPoly characteristic_polynomial(const CxMatrix& m);

/// Eigenvalues of a square complex matrix (n <= 12) as the roots of the
/// characteristic polynomial. Throws SizeLimitError above the size limit.
std::vector<Cx> cx_eigenvalues(const CxMatrix& m, const SolverConfig& cfg = {});

/// Spectrum of a bicomplex matrix: the two component spectra plus their full
/// idempotent cross product (numerically coincident combined values collapsed
/// at relative tolerance 1e-8).
struct Spectrum {
    std::vector<Cx> component1;
    std::vector<Cx> component2;
    std::vector<BiComplex> combined;
};

Spectrum eigenvalues(const BCMatrix& a, const SolverConfig& cfg = {});

/// Localization verdicts for one combined eigenvalue b1*e + b2*e'.
struct EigenLocalization {
    BiComplex value{};
    Cx lambda1{};             ///< component eigenvalue of A1
    Cx lambda2{};             ///< component eigenvalue of A2
    bool product_region = false;  ///< b1 in union of A1 disks AND b2 in union of A2 disks
    bool ball_union = false;      ///< Euclidean Gershgorin ball union membership
    bool discus_union = false;    ///< per-row discus union membership
};

/// Gershgorin check of every combined eigenvalue. The product-region verdict
/// is backed by the classical disk theorem applied per component and is
/// expected to hold always; the Euclidean ball-union and discus-union
/// verdicts are reported as observed (they can fail: the component disks that
/// capture b1 and b2 may sit in different rows).
struct GershgorinReport {
    std::vector<GershgorinRegion> regions;
    std::vector<EigenLocalization> eigenvalues;

    bool product_region_all() const;
    int ball_union_hits() const;
    int discus_union_hits() const;
};

/// Membership slack per comparison is tol * (1 + radius + |center|). The
/// default 1e-6 is the verification tolerance that also absorbs the solver's
/// degraded accuracy on repeated eigenvalues (multiplicity <= 3).
GershgorinReport check_gershgorin(const BCMatrix& a, const SolverConfig& cfg = {},
                                  double tol = 1e-6);

}  // namespace bcb
