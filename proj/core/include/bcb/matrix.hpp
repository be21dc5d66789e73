#pragma once

#include <utility>
#include <vector>

#include "bcb/bicomplex.hpp"

namespace bcb {

/// Dense row-major complex matrix.
struct CxMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Cx> entries;

    CxMatrix() = default;
    CxMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}

    static CxMatrix identity(int n);

    Cx& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
    const Cx& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
    bool is_square() const { return rows == cols && rows > 0; }
};

/// Dense row-major bicomplex matrix.
struct BCMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BiComplex> entries;

    BCMatrix() = default;
    BCMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}

    static BCMatrix identity(int n);

    BiComplex& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
    const BiComplex& at(int r, int c) const {
        return entries[static_cast<size_t>(r) * cols + c];
    }
    bool is_square() const { return rows == cols && rows > 0; }
};

/// Entrywise idempotent decomposition A = A1*e + A2*e'.
std::pair<CxMatrix, CxMatrix> split(const BCMatrix& a);

/// Inverse of split. Throws ShapeError when the shapes differ.
BCMatrix compose(const CxMatrix& m1, const CxMatrix& m2);

/// Determinant via partial-pivot LU. Throws ShapeError for non-square input.
Cx determinant(const CxMatrix& m);

/// Bicomplex determinant det(A1)*e + det(A2)*e' of the split components.
BiComplex determinant(const BCMatrix& a);

CxMatrix multiply(const CxMatrix& a, const CxMatrix& b);

/// One Gershgorin row: the diagonal entry plus off-diagonal row sums, both as
/// a single Euclidean radius and as the per-component pair of radii.
struct GershgorinRegion {
    int row = 0;
    BiComplex center{};
    double euclid_radius = 0.0;  ///< sum of Euclidean norms of off-diagonal entries
    double hyp_r1 = 0.0;         ///< off-diagonal modulus sum of the first component row
    double hyp_r2 = 0.0;         ///< off-diagonal modulus sum of the second component row
};

/// Row regions of a square bicomplex matrix.
std::vector<GershgorinRegion> gershgorin(const BCMatrix& a);

}  // namespace bcb
