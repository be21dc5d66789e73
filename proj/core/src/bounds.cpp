#include "bcb/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "bcb/errors.hpp"
#include "bcb/roots.hpp"

namespace bcb {

const char* bound_kind_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::Cauchy: return "cauchy";
        case BoundKind::Lacunary: return "lacunary";
        case BoundKind::Kojima: return "kojima";
        case BoundKind::Ballieu: return "ballieu";
        case BoundKind::PositiveRoot: return "positive-root";
        case BoundKind::Fujiwara: return "fujiwara";
        case BoundKind::Walsh: return "walsh";
        case BoundKind::LandauLower: return "landau-lower";
        case BoundKind::ComponentDiscus: return "component-discus";
    }
    return "unknown";
}

BoundKind bound_kind_from_name(const std::string& name) {
    for (BoundKind k :
         {BoundKind::Cauchy, BoundKind::Lacunary, BoundKind::Kojima, BoundKind::Ballieu,
          BoundKind::PositiveRoot, BoundKind::Fujiwara, BoundKind::Walsh,
          BoundKind::LandauLower, BoundKind::ComponentDiscus})
        if (name == bound_kind_name(k)) return k;
    throw BadWeightsError("unknown bound kind: " + name);
}

namespace {

struct MonicData {
    BCPoly monic;           // leading coefficient exactly 1
    int n = 0;
    std::vector<double> w;  // w[i] = |monic.coeffs[i]|, i < n
    bool degenerate = true; // every lower coefficient zero
};

MonicData prepare(const BCPoly& p) {
    const int n = p.degree();
    if (n == 0) throw ZeroDegreeError("bounds: constant polynomial has no root set to bound");
    if (n < 0) throw ZeroDegreeError("bounds: zero polynomial");
    MonicData d;
    d.monic = normalize_monic(p);
    d.n = n;
    d.w.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        d.w[static_cast<size_t>(i)] = norm(d.monic.coeffs[static_cast<size_t>(i)]);
        if (d.w[static_cast<size_t>(i)] != 0.0) d.degenerate = false;
    }
    return d;
}

double lacunary_radius(const MonicData& d, double r) {
    int p_idx = -1;
    for (int i = d.n - 1; i >= 0; --i)
        if (d.w[static_cast<size_t>(i)] != 0.0) {
            p_idx = i;
            break;
        }
    if (p_idx < 0) return r;  // no lower coefficients: the r branch alone
    double sum = 0.0;
    for (int i = 0; i <= p_idx; ++i)
        sum += d.w[static_cast<size_t>(i)] / std::pow(r, d.n - i - 1);
    return std::max(r, sum);
}

// classical complex bounds applied to one split component
double component_cauchy(const CxPoly& f) {
    const int n = f.degree();
    const Cx lead = f.coeffs[static_cast<size_t>(n)];
    double m = 0.0;
    for (int i = 0; i < n; ++i)
        m = std::max(m, std::abs(f.coeffs[static_cast<size_t>(i)] / lead));
    return 1.0 + m;
}

double component_positive_root(const CxPoly& f) {
    const int n = f.degree();
    RealPoly g;
    g.coeffs.resize(static_cast<size_t>(n) + 1);
    for (int i = 0; i < n; ++i) g.coeffs[static_cast<size_t>(i)] = -std::abs(f.coeffs[static_cast<size_t>(i)]);
    g.coeffs[static_cast<size_t>(n)] = std::abs(f.coeffs[static_cast<size_t>(n)]);
    return positive_root(g);
}

}  // namespace

BoundResult cauchy_bound(const BCPoly& p) {
    const MonicData d = prepare(p);
    const double radius = 1.0 + *std::max_element(d.w.begin(), d.w.end());
    BoundResult out;
    out.kind = BoundKind::Cauchy;
    out.region = Region::ball(BiComplex::zero(), radius);
    out.params.degenerate = d.degenerate;
    return out;
}

BoundResult lacunary_bound(const BCPoly& p, double r) {
    if (!(r > 0.0) || !std::isfinite(r))
        throw BadWeightsError("lacunary_bound: r must be positive");
    const MonicData d = prepare(p);
    BoundResult out;
    out.kind = BoundKind::Lacunary;
    out.region = Region::ball(BiComplex::zero(), lacunary_radius(d, r));
    out.params.r = r;
    out.params.degenerate = d.degenerate;
    return out;
}

BoundResult lacunary_bound_optimized(const BCPoly& p) {
    const MonicData d = prepare(p);
    double sum_w = 0.0;
    for (double w : d.w) sum_w += w;
    double lo = 1e-6;
    double hi = 1.0 + sum_w;

    double best_r = 1.0;
    double best = lacunary_radius(d, 1.0);
    const auto consider = [&](double r) {
        const double value = lacunary_radius(d, r);
        if (value < best) {
            best = value;
            best_r = r;
        }
    };
    consider(lo);
    consider(hi);

    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = lacunary_radius(d, x1);
    double f2 = lacunary_radius(d, x2);
    for (int it = 0; it < 200; ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = lacunary_radius(d, x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = lacunary_radius(d, x2);
        }
    }
    consider(0.5 * (a + b));
    consider(x1);
    consider(x2);

    BoundResult out;
    out.kind = BoundKind::Lacunary;
    out.region = Region::ball(BiComplex::zero(), best);
    out.params.r = best_r;
    out.params.degenerate = d.degenerate;
    out.params.note = "golden-section";
    return out;
}

BoundResult kojima_like_bound(const BCPoly& p) {
    const MonicData d = prepare(p);
    double radius = 0.0;
    for (int i = 1; i <= d.n; ++i)
        radius += std::pow(d.w[static_cast<size_t>(d.n - i)], 1.0 / i);
    BoundResult out;
    out.kind = BoundKind::Kojima;
    out.region = Region::ball(BiComplex::zero(), radius);
    out.params.degenerate = d.degenerate;
    return out;
}

BoundResult ballieu_bound(const BCPoly& p, std::span<const double> interior_weights) {
    const MonicData d = prepare(p);
    if (static_cast<int>(interior_weights.size()) != d.n - 1)
        throw BadWeightsError("ballieu_bound: need exactly degree-1 interior weights");
    for (double x : interior_weights)
        if (!(x > 0.0) || !std::isfinite(x))
            throw BadWeightsError("ballieu_bound: weights must be positive");

    std::vector<double> x(static_cast<size_t>(d.n) + 1);
    x[0] = 0.0;
    for (int i = 1; i < d.n; ++i) x[static_cast<size_t>(i)] = interior_weights[static_cast<size_t>(i) - 1];
    x[static_cast<size_t>(d.n)] = 1.0;

    double radius = 0.0;
    for (int i = 0; i < d.n; ++i) {
        const double term =
            x[static_cast<size_t>(i)] / x[static_cast<size_t>(i) + 1] + d.w[static_cast<size_t>(i)] / x[static_cast<size_t>(i) + 1];
        radius = std::max(radius, term);
    }
    BoundResult out;
    out.kind = BoundKind::Ballieu;
    out.region = Region::ball(BiComplex::zero(), radius);
    out.params.weights.assign(interior_weights.begin(), interior_weights.end());
    out.params.degenerate = d.degenerate;
    return out;
}

BoundResult positive_root_bound(const BCPoly& p) {
    const MonicData d = prepare(p);  // enforces an invertible leading coefficient
    const int n = d.n;
    RealPoly g;
    g.coeffs.resize(static_cast<size_t>(n) + 1);
    bool degenerate = true;
    for (int i = 0; i < n; ++i) {
        const double a = norm(p.coeffs[static_cast<size_t>(i)]);
        if (a != 0.0) degenerate = false;
        g.coeffs[static_cast<size_t>(i)] = -a;
    }
    g.coeffs[static_cast<size_t>(n)] = norm(p.coeffs[static_cast<size_t>(n)]);

    BoundResult out;
    out.kind = BoundKind::PositiveRoot;
    out.region = Region::ball(BiComplex::zero(), degenerate ? 0.0 : positive_root(g));
    out.params.degenerate = degenerate;
    return out;
}

BoundResult fujiwara_bound(const BCPoly& p, std::span<const double> lambda) {
    const MonicData d = prepare(p);
    if (static_cast<int>(lambda.size()) != d.n)
        throw BadWeightsError("fujiwara_bound: need exactly degree-many weights");
    double sum = 0.0;
    for (double l : lambda) {
        if (!(l > 0.0) || !std::isfinite(l))
            throw BadWeightsError("fujiwara_bound: weights must be positive");
        sum += l;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw BadWeightsError("fujiwara_bound: weights must sum to 1");

    double radius = 0.0;
    for (int i = 1; i <= d.n; ++i) {
        const double term =
            std::pow(d.w[static_cast<size_t>(d.n - i)] / lambda[static_cast<size_t>(i) - 1], 1.0 / i);
        radius = std::max(radius, term);
    }
    BoundResult out;
    out.kind = BoundKind::Fujiwara;
    out.region = Region::ball(BiComplex::zero(), radius);
    out.params.weights.assign(lambda.begin(), lambda.end());
    out.params.degenerate = d.degenerate;
    return out;
}

BoundResult walsh_region(const BCPoly& p) {
    const MonicData d = prepare(p);
    const BiComplex center = -0.5 * d.monic.coeffs[static_cast<size_t>(d.n) - 1];
    double radius = norm(center);
    for (int i = 2; i <= d.n; ++i)
        radius += std::pow(d.w[static_cast<size_t>(d.n - i)], 1.0 / i);
    BoundResult out;
    out.kind = BoundKind::Walsh;
    out.region = Region::ball(center, radius);
    out.params.degenerate = d.degenerate;
    return out;
}

BoundResult landau_lower_bound(const BCPoly& p, double t) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw BadWeightsError("landau_lower_bound: t must be positive");
    const MonicData d = prepare(p);  // hypotheses still need an invertible A_n
    const int n = d.n;

    BoundResult out;
    out.kind = BoundKind::LandauLower;
    out.params.t = t;

    const BiComplex a0 = p.coeffs[0];
    if (!is_invertible(a0)) {
        // |A_0| = 0 means 0 itself is a root; a zero-divisor A_0 leaves the
        // quotient in the underlying argument undefined. Both get radius 0.
        out.region = Region::exterior_ball(BiComplex::zero(), 0.0);
        out.params.degenerate = true;
        out.params.note = a0.is_zero() ? "A0 zero" : "A0 zero divisor";
        return out;
    }
    const double a0n = norm(a0);
    double m = 0.0;
    for (int i = 1; i <= n; ++i)
        m = std::max(m, norm(p.coeffs[static_cast<size_t>(i)]) * std::pow(t, i));
    out.region = Region::exterior_ball(BiComplex::zero(), a0n * t / (a0n + m));
    return out;
}

BoundResult component_discus_bound(const BCPoly& p, DiscusBase base) {
    const auto [f, g] = split_poly(p);
    if (f.degree() < 1 || g.degree() < 1)
        throw ComponentDegenerateError(
            "component_discus_bound: both split components must have degree >= 1");

    const double b1 = base == DiscusBase::Cauchy ? component_cauchy(f) : component_positive_root(f);
    const double b2 = base == DiscusBase::Cauchy ? component_cauchy(g) : component_positive_root(g);

    BoundResult out;
    out.kind = BoundKind::ComponentDiscus;
    out.region = Region::discus(BiComplex::zero(), b1, b2);
    out.params.base = base == DiscusBase::Cauchy ? "cauchy" : "positive-root";
    return out;
}

}  // namespace bcb
