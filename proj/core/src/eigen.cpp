#include "bcb/eigen.hpp"

#include <algorithm>
#include <cmath>

#include "bcb/errors.hpp"

namespace bcb {

namespace {

Cx trace(const CxMatrix& m) {
    Cx t = 0.0;
    for (int i = 0; i < m.rows; ++i) t += m.at(i, i);
    return t;
}

bool in_disk_union(const Cx& value, const CxMatrix& m,
                   const std::vector<GershgorinRegion>& regions, bool first_component,
                   double tol) {
    for (const GershgorinRegion& r : regions) {
        const Cx center = m.at(r.row, r.row);
        const double radius = first_component ? r.hyp_r1 : r.hyp_r2;
        const double slack = tol * (1.0 + radius + std::abs(center));
        if (std::abs(value - center) <= radius + slack) return true;
    }
    return false;
}

}  // namespace

CxPoly characteristic_polynomial(const CxMatrix& m) {
    if (!m.is_square()) throw ShapeError("characteristic_polynomial: square matrix required");
    const int n = m.rows;
    std::vector<Cx> c(static_cast<size_t>(n) + 1);
    c[static_cast<size_t>(n)] = 1.0;

    CxMatrix mk = m;
    c[static_cast<size_t>(n) - 1] = -trace(mk);
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i) mk.at(i, i) += c[static_cast<size_t>(n - k + 1)];
        mk = multiply(m, mk);
        c[static_cast<size_t>(n - k)] = -trace(mk) / static_cast<double>(k);
    }
    return CxPoly(std::move(c));
}

std::vector<Cx> cx_eigenvalues(const CxMatrix& m, const SolverConfig& cfg) {
    if (!m.is_square()) throw ShapeError("cx_eigenvalues: square matrix required");
    if (m.rows > kMaxEigenSize)
        throw SizeLimitError("cx_eigenvalues: matrix larger than the supported size");
    return cx_roots(characteristic_polynomial(m), cfg);
}

Spectrum eigenvalues(const BCMatrix& a, const SolverConfig& cfg) {
    if (!a.is_square()) throw ShapeError("eigenvalues: square matrix required");
    if (a.rows > kMaxEigenSize)
        throw SizeLimitError("eigenvalues: matrix larger than the supported size");
    const auto [m1, m2] = split(a);
    Spectrum s;
    s.component1 = cx_eigenvalues(m1, cfg);
    s.component2 = cx_eigenvalues(m2, cfg);
    s.combined.reserve(s.component1.size() * s.component2.size());
    for (const Cx& l1 : s.component1)
        for (const Cx& l2 : s.component2) {
            const BiComplex v = compose_i({l1, l2});
            const bool duplicate =
                std::any_of(s.combined.begin(), s.combined.end(), [&](const BiComplex& w) {
                    return norm(v - w) <= 1e-8 * std::max(1.0, norm(v));
                });
            if (!duplicate) s.combined.push_back(v);
        }
    return s;
}

bool GershgorinReport::product_region_all() const {
    return std::all_of(eigenvalues.begin(), eigenvalues.end(),
                       [](const EigenLocalization& e) { return e.product_region; });
}

int GershgorinReport::ball_union_hits() const {
    return static_cast<int>(std::count_if(eigenvalues.begin(), eigenvalues.end(),
                                          [](const EigenLocalization& e) { return e.ball_union; }));
}

int GershgorinReport::discus_union_hits() const {
    return static_cast<int>(std::count_if(
        eigenvalues.begin(), eigenvalues.end(),
        [](const EigenLocalization& e) { return e.discus_union; }));
}

GershgorinReport check_gershgorin(const BCMatrix& a, const SolverConfig& cfg, double tol) {
    if (!a.is_square()) throw ShapeError("check_gershgorin: square matrix required");
    GershgorinReport report;
    report.regions = gershgorin(a);
    const auto [m1, m2] = split(a);
    const std::vector<Cx> spec1 = cx_eigenvalues(m1, cfg);
    const std::vector<Cx> spec2 = cx_eigenvalues(m2, cfg);

    for (const Cx& l1 : spec1)
        for (const Cx& l2 : spec2) {
            EigenLocalization loc;
            loc.lambda1 = l1;
            loc.lambda2 = l2;
            loc.value = compose_i({l1, l2});
            loc.product_region = in_disk_union(l1, m1, report.regions, true, tol) &&
                                 in_disk_union(l2, m2, report.regions, false, tol);
            for (const GershgorinRegion& r : report.regions) {
                const double ball_slack = tol * (1.0 + r.euclid_radius + norm(r.center));
                if (norm(loc.value - r.center) <= r.euclid_radius + ball_slack)
                    loc.ball_union = true;
                const IdemPair pc = decompose_i(r.center);
                const double s1 = tol * (1.0 + r.hyp_r1 + std::abs(pc.b1));
                const double s2 = tol * (1.0 + r.hyp_r2 + std::abs(pc.b2));
                if (std::abs(l1 - pc.b1) <= r.hyp_r1 + s1 && std::abs(l2 - pc.b2) <= r.hyp_r2 + s2)
                    loc.discus_union = true;
            }
            report.eigenvalues.push_back(loc);
        }
    return report;
}

}  // namespace bcb
