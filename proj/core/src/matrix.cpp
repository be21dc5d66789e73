#include "bcb/matrix.hpp"

#include <cmath>
#include <utility>

#include "bcb/errors.hpp"

namespace bcb {

CxMatrix CxMatrix::identity(int n) {
    CxMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

BCMatrix BCMatrix::identity(int n) {
    BCMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = BiComplex::one();
    return m;
}

std::pair<CxMatrix, CxMatrix> split(const BCMatrix& a) {
    CxMatrix m1(a.rows, a.cols), m2(a.rows, a.cols);
    for (size_t k = 0; k < a.entries.size(); ++k) {
        const IdemPair p = decompose_i(a.entries[k]);
        m1.entries[k] = p.b1;
        m2.entries[k] = p.b2;
    }
    return {std::move(m1), std::move(m2)};
}

BCMatrix compose(const CxMatrix& m1, const CxMatrix& m2) {
    if (m1.rows != m2.rows || m1.cols != m2.cols)
        throw ShapeError("compose: component shapes differ");
    BCMatrix a(m1.rows, m1.cols);
    for (size_t k = 0; k < a.entries.size(); ++k)
        a.entries[k] = compose_i({m1.entries[k], m2.entries[k]});
    return a;
}

Cx determinant(const CxMatrix& m) {
    if (!m.is_square()) throw ShapeError("determinant: square matrix required");
    const int n = m.rows;
    CxMatrix lu = m;
    Cx det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(lu.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double mag = std::abs(lu.at(r, col));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (pivot != col) {
            for (int c = col; c < n; ++c) std::swap(lu.at(col, c), lu.at(pivot, c));
            det = -det;
        }
        const Cx p = lu.at(col, col);
        det *= p;
        for (int r = col + 1; r < n; ++r) {
            const Cx factor = lu.at(r, col) / p;
            for (int c = col + 1; c < n; ++c) lu.at(r, c) -= factor * lu.at(col, c);
        }
    }
    return det;
}

BiComplex determinant(const BCMatrix& a) {
    if (!a.is_square()) throw ShapeError("determinant: square matrix required");
    const auto [m1, m2] = split(a);
    return compose_i({determinant(m1), determinant(m2)});
}

CxMatrix multiply(const CxMatrix& a, const CxMatrix& b) {
    if (a.cols != b.rows) throw ShapeError("multiply: inner dimensions differ");
    CxMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Cx aik = a.at(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

std::vector<GershgorinRegion> gershgorin(const BCMatrix& a) {
    if (!a.is_square()) throw ShapeError("gershgorin: square matrix required");
    std::vector<GershgorinRegion> regions;
    regions.reserve(static_cast<size_t>(a.rows));
    for (int i = 0; i < a.rows; ++i) {
        GershgorinRegion r;
        r.row = i;
        r.center = a.at(i, i);
        for (int j = 0; j < a.cols; ++j) {
            if (j == i) continue;
            const BiComplex& e = a.at(i, j);
            r.euclid_radius += norm(e);
            const HypModulus h = hyp_modulus(e);
            r.hyp_r1 += h.m1;
            r.hyp_r2 += h.m2;
        }
        regions.push_back(r);
    }
    return regions;
}

}  // namespace bcb
