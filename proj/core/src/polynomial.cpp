#include "bcb/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bcb/errors.hpp"

namespace bcb {

int CxPoly::degree() const {
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        if (coeffs[i] != 0.0) return i;
    return -1;
}

Cx CxPoly::operator()(const Cx& x) const {
    Cx acc = 0.0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) acc = acc * x + coeffs[i];
    return acc;
}

int BCPoly::degree() const {
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        if (!coeffs[i].is_zero()) return i;
    return -1;
}

BiComplex BCPoly::leading() const {
    const int n = degree();
    if (n < 0) throw ZeroDegreeError("leading coefficient of the zero polynomial");
    return coeffs[static_cast<size_t>(n)];
}

std::pair<CxPoly, CxPoly> split_poly(const BCPoly& p) {
    CxPoly f, g;
    f.coeffs.reserve(p.coeffs.size());
    g.coeffs.reserve(p.coeffs.size());
    for (const BiComplex& c : p.coeffs) {
        const IdemPair pair = decompose_i(c);
        f.coeffs.push_back(pair.b1);
        g.coeffs.push_back(pair.b2);
    }
    return {std::move(f), std::move(g)};
}

BiComplex evaluate(const BCPoly& p, const BiComplex& z) {
    BiComplex acc = BiComplex::zero();
    for (int i = static_cast<int>(p.coeffs.size()) - 1; i >= 0; --i)
        acc = acc * z + p.coeffs[static_cast<size_t>(i)];
    return acc;
}

BCPoly normalize_monic(const BCPoly& p) {
    const int n = p.degree();
    if (n < 1) throw ZeroDegreeError("normalize_monic: degree >= 1 required");
    const BiComplex lead = p.coeffs[static_cast<size_t>(n)];
    if (lead == BiComplex::one()) {
        BCPoly out;
        out.coeffs.assign(p.coeffs.begin(), p.coeffs.begin() + n + 1);
        return out;
    }
    if (!is_invertible(lead))
        throw NonInvertibleLeadingError("leading coefficient is zero or a zero divisor");
    const BiComplex inv = inverse(lead);
    BCPoly out;
    out.coeffs.resize(static_cast<size_t>(n) + 1);
    for (int i = 0; i < n; ++i) out.coeffs[static_cast<size_t>(i)] = p.coeffs[static_cast<size_t>(i)] * inv;
    out.coeffs[static_cast<size_t>(n)] = BiComplex::one();
    return out;
}

BCMatrix companion(const BCPoly& p) {
    const int n = p.degree();
    if (n < 1) throw ZeroDegreeError("companion: degree >= 1 required");
    if (p.coeffs[static_cast<size_t>(n)] != BiComplex::one())
        throw NotMonicError("companion: polynomial must be monic");
    BCMatrix c(n, n);
    for (int i = 0; i + 1 < n; ++i) c.at(i, i + 1) = BiComplex::one();
    for (int i = 0; i < n; ++i) c.at(n - 1, i) = -p.coeffs[static_cast<size_t>(i)];
    return c;
}

BCMatrix scaled_companion(const BCPoly& p, std::span<const double> diag_scale) {
    const int n = p.degree();
    if (n < 1) throw ZeroDegreeError("scaled_companion: degree >= 1 required");
    if (p.coeffs[static_cast<size_t>(n)] != BiComplex::one())
        throw NotMonicError("scaled_companion: polynomial must be monic");
    if (static_cast<int>(diag_scale.size()) != n)
        throw ShapeError("scaled_companion: diagonal scale length must equal the degree");
    for (double d : diag_scale)
        if (!(d > 0.0) || !std::isfinite(d))
            throw BadWeightsError("scaled_companion: diagonal entries must be positive");
    BCMatrix c(n, n);
    for (int i = 0; i + 1 < n; ++i)
        c.at(i, i + 1) = BiComplex(diag_scale[static_cast<size_t>(i) + 1] / diag_scale[static_cast<size_t>(i)]);
    const double dn = diag_scale[static_cast<size_t>(n) - 1];
    for (int i = 0; i < n; ++i)
        c.at(n - 1, i) = -p.coeffs[static_cast<size_t>(i)] * (diag_scale[static_cast<size_t>(i)] / dn);
    return c;
}

const char* root_case_name(RootStructureKind kind) {
    switch (kind) {
        case RootStructureKind::CrossProduct: return "cross-product";
        case RootStructureKind::FirstComponentFree: return "component1-free";
        case RootStructureKind::SecondComponentFree: return "component2-free";
        case RootStructureKind::NoRoots: return "no-roots";
    }
    return "unknown";
}

RootStructureKind root_case_from_name(const std::string& name) {
    for (RootStructureKind k :
         {RootStructureKind::CrossProduct, RootStructureKind::FirstComponentFree,
          RootStructureKind::SecondComponentFree, RootStructureKind::NoRoots})
        if (name == root_case_name(k)) return k;
    throw ParseError("unknown root-structure case: " + name);
}

RootStructure classify_roots(const BCPoly& p, std::vector<Cx> s1, std::vector<Cx> s2) {
    const auto [f, g] = split_poly(p);
    const int df = f.degree();
    const int dg = g.degree();
    if (df < 0 && dg < 0) throw ZeroDegreeError("classify_roots: zero polynomial");

    RootStructure out;
    if (df == 0 || dg == 0) {
        // One component is a nonzero constant: its root set is empty, so the
        // cross product is empty regardless of the other side.
        out.kind = RootStructureKind::NoRoots;
        return out;
    }
    if (df < 0) {
        out.kind = RootStructureKind::FirstComponentFree;
        out.component2 = std::move(s2);
        return out;
    }
    if (dg < 0) {
        out.kind = RootStructureKind::SecondComponentFree;
        out.component1 = std::move(s1);
        return out;
    }
    out.kind = RootStructureKind::CrossProduct;
    out.component1 = std::move(s1);
    out.component2 = std::move(s2);
    out.combined.reserve(out.component1.size() * out.component2.size());
    for (const Cx& a : out.component1)
        for (const Cx& b : out.component2) out.combined.push_back(compose_i({a, b}));
    return out;
}

namespace {

template <typename T, typename DistFn, typename NormFn>
bool match_multisets(std::span<const T> a, std::span<const T> b, double tol, DistFn dist,
                     NormFn magnitude) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const T& x : a) {
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double d = dist(x, b[j]);
            if (d < best_d) {
                best_d = d;
                best = static_cast<int>(j);
            }
        }
        if (best < 0 || best_d > tol * std::max(1.0, magnitude(x))) return false;
        used[static_cast<size_t>(best)] = true;
    }
    return true;
}

}  // namespace

bool roots_match(std::span<const Cx> a, std::span<const Cx> b, double tol) {
    return match_multisets(
        a, b, tol, [](const Cx& x, const Cx& y) { return std::abs(x - y); },
        [](const Cx& x) { return std::abs(x); });
}

bool roots_match(std::span<const BiComplex> a, std::span<const BiComplex> b, double tol) {
    return match_multisets(
        a, b, tol, [](const BiComplex& x, const BiComplex& y) { return norm(x - y); },
        [](const BiComplex& x) { return norm(x); });
}

}  // namespace bcb
