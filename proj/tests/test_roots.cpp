#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "bcb/eigen.hpp"
#include "bcb/errors.hpp"
#include "bcb/roots.hpp"
#include "oracles.hpp"

using namespace bcb;

namespace {

std::mt19937_64 rng(777u);

Cx random_cx(double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng)};
}

double residual_limit(const CxPoly& monic, const Cx& root, double tol) {
    const int n = monic.degree();
    double scale = 1.0;
    for (const Cx& c : monic.coeffs) scale = std::max(scale, std::abs(c));
    return tol * scale * std::pow(std::max(1.0, std::abs(root)), n);
}

}  // namespace

TEST_CASE("cx_roots on fixed polynomials") {
    CxPoly p1(std::vector<Cx>{-1.0, 0.0, 1.0});  // z^2 - 1
    CHECK(roots_match(cx_roots(p1), std::vector<Cx>{-1.0, 1.0}, 1e-9));

    CxPoly p2(std::vector<Cx>{1.0, 0.0, 1.0});  // z^2 + 1
    CHECK(roots_match(cx_roots(p2), std::vector<Cx>{Cx(0, 1), Cx(0, -1)}, 1e-9));

    // (z-1)(z-2)(z-3) = z^3 - 6z^2 + 11z - 6
    CxPoly p3(std::vector<Cx>{-6.0, 11.0, -6.0, 1.0});
    CHECK(roots_match(cx_roots(p3), std::vector<Cx>{1.0, 2.0, 3.0}, 1e-9));
}

TEST_CASE("cx_roots returns degree-many values with small residuals") {
    for (int it = 0; it < 300; ++it) {
        const int n = 2 + it % 7;
        CxPoly p;
        for (int i = 0; i < n; ++i) p.coeffs.push_back(random_cx(10.0));
        p.coeffs.push_back(1.0);
        const auto roots = cx_roots(p);
        REQUIRE(static_cast<int>(roots.size()) == n);
        for (const Cx& r : roots) CHECK(std::abs(p(r)) <= residual_limit(p, r, 1e-12));
    }
}

TEST_CASE("reconstruction from well-separated roots") {
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    int built = 0;
    while (built < 200) {
        const int n = 2 + built % 7;
        std::vector<Cx> roots;
        while (static_cast<int>(roots.size()) < n) {
            const Cx candidate(u(rng), u(rng));
            const bool separated = std::all_of(roots.begin(), roots.end(), [&](const Cx& r) {
                return std::abs(candidate - r) >= 0.5;
            });
            if (separated) roots.push_back(candidate);
        }
        const std::vector<Cx> coeffs = oracle::poly_from_roots(roots);
        const auto found = cx_roots(CxPoly(coeffs));
        CHECK(roots_match(found, roots, 1e-9));

        const std::vector<Cx> rebuilt = oracle::poly_from_roots(found);
        double coeff_scale = 1.0;
        for (const Cx& c : coeffs) coeff_scale = std::max(coeff_scale, std::abs(c));
        for (size_t i = 0; i < coeffs.size(); ++i)
            CHECK(std::abs(rebuilt[i] - coeffs[i]) <= 1e-6 * coeff_scale);
        ++built;
    }
}

TEST_CASE("cx_roots handles multiple roots within the residual criterion") {
    // z^3: triple root at 0
    CxPoly cube(std::vector<Cx>{0.0, 0.0, 0.0, 1.0});
    const auto roots = cx_roots(cube);
    REQUIRE(roots.size() == 3);
    for (const Cx& r : roots) CHECK(std::abs(r) <= 2e-4);

    // (z-1)^2
    CxPoly dbl(std::vector<Cx>{1.0, -2.0, 1.0});
    for (const Cx& r : cx_roots(dbl)) CHECK(std::abs(r - 1.0) <= 1e-5);
}

TEST_CASE("cx_roots is deterministic and rejects bad input") {
    CxPoly p(std::vector<Cx>{Cx(1, 2), Cx(-3, 0.5), Cx(0, 1), 1.0});
    const auto a = cx_roots(p);
    const auto b = cx_roots(p);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

    CxPoly constant(std::vector<Cx>{3.0});
    CHECK_THROWS_AS(cx_roots(constant), ZeroDegreeError);
    SolverConfig bad;
    bad.max_iterations = 0;
    CHECK_THROWS_AS(cx_roots(p, bad), BadWeightsError);
}

TEST_CASE("positive_root on fixed polynomials") {
    // x^2 - x - 1: golden ratio
    RealPoly phi(std::vector<double>{-1.0, -1.0, 1.0});
    CHECK(positive_root(phi) == doctest::Approx(oracle::quadratic_positive_root(1.0, 1.0)).epsilon(1e-12));

    // x^3 - 8
    RealPoly cube(std::vector<double>{-8.0, 0.0, 0.0, 1.0});
    CHECK(positive_root(cube) == doctest::Approx(2.0).epsilon(1e-12));

    // x^2 - 2x (zero constant term)
    RealPoly facts(std::vector<double>{0.0, -2.0, 1.0});
    CHECK(positive_root(facts) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("positive_root brackets, degenerates and rejects") {
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int it = 0; it < 500; ++it) {
        const int n = 1 + it % 7;
        RealPoly g;
        bool any = false;
        for (int i = 0; i < n; ++i) {
            const double c = it % 5 == 0 && i % 2 == 0 ? 0.0 : u(rng);
            if (c > 0.0) any = true;
            g.coeffs.push_back(-c);
        }
        g.coeffs.push_back(1.0 + u(rng));
        if (!any) {
            CHECK(positive_root(g) == 0.0);
            continue;
        }
        const double x = positive_root(g);
        CHECK(x > 0.0);
        const double h = 1e-9 * (1.0 + x);
        CHECK(g(x - h) < 0.0);
        CHECK(g(x + h) > 0.0);
    }

    RealPoly bad_lead(std::vector<double>{-1.0, -1.0});
    CHECK_THROWS_AS(positive_root(bad_lead), InvalidSignPatternError);
    RealPoly two_changes(std::vector<double>{-1.0, 2.0, 1.0});
    CHECK_THROWS_AS(positive_root(two_changes), InvalidSignPatternError);
}

TEST_CASE("bc_roots assembles the cross product") {
    // Z^2 + 1: roots i, -i, j, -j
    BCPoly p;
    p.coeffs = {BiComplex(1.0), BiComplex::zero(), BiComplex(1.0)};
    const RootStructure rs = bc_roots(p);
    CHECK(rs.kind == RootStructureKind::CrossProduct);
    REQUIRE(rs.combined.size() == 4);
    const std::vector<BiComplex> expected = {BiComplex::unit_i(), -BiComplex::unit_i(),
                                             BiComplex::unit_j(), -BiComplex::unit_j()};
    CHECK(roots_match(rs.combined, expected, 1e-9));
    for (const BiComplex& z : rs.combined) CHECK(norm(evaluate(p, z)) <= 1e-10);

    // Z^2 + eZ - e'
    BCPoly q;
    q.coeffs = {-BiComplex::idem_e_dagger(), BiComplex::idem_e(), BiComplex(1.0)};
    const RootStructure qs = bc_roots(q);
    REQUIRE(qs.combined.size() == 4);
    double max_norm = 0;
    for (const BiComplex& z : qs.combined) max_norm = std::max(max_norm, norm(z));
    CHECK(max_norm == doctest::Approx(1.0));

    // eZ + e': no roots
    BCPoly n;
    n.coeffs = {BiComplex::idem_e_dagger(), BiComplex::idem_e()};
    CHECK(bc_roots(n).kind == RootStructureKind::NoRoots);

    // eZ: free second component
    BCPoly f;
    f.coeffs = {BiComplex::zero(), BiComplex::idem_e()};
    const RootStructure fs = bc_roots(f);
    CHECK(fs.kind == RootStructureKind::SecondComponentFree);

    BCPoly zero;
    zero.coeffs = {BiComplex::zero()};
    CHECK_THROWS_AS(bc_roots(zero), ZeroDegreeError);
}

TEST_CASE("bc_roots agrees with the companion-matrix spectrum") {
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int it = 0; it < 60; ++it) {
        const int n = 2 + it % 6;
        BCPoly p;
        for (int i = 0; i < n; ++i)
            p.coeffs.push_back(BiComplex(Cx(u(rng), u(rng)), Cx(u(rng), u(rng))));
        // non-monic but invertible leading coefficient
        p.coeffs.push_back(BiComplex(Cx(2.0, 1.0), Cx(0.5, -0.25)));
        const RootStructure rs = bc_roots(p);
        REQUIRE(rs.kind == RootStructureKind::CrossProduct);
        const Spectrum s = eigenvalues(companion(normalize_monic(p)));
        CHECK(roots_match(std::span<const BiComplex>(s.combined),
                          std::span<const BiComplex>(rs.combined), 1e-6));
    }
}

TEST_CASE("root sets are exactly covariant under coordinate scaling") {
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::uniform_real_distribution<double> cs(0.25, 4.0);
    for (int it = 0; it < 100; ++it) {
        const int n = 2 + it % 6;
        const double c = cs(rng);
        BCPoly p;
        for (int i = 0; i < n; ++i)
            p.coeffs.push_back(BiComplex(Cx(u(rng), u(rng)), Cx(u(rng), u(rng))));
        p.coeffs.push_back(BiComplex::one());

        // Q(Z) = P(cZ): coefficients A_i c^i; roots of Q are roots of P over c
        BCPoly q = p;
        double power = 1.0;
        for (size_t i = 0; i < q.coeffs.size(); ++i) {
            q.coeffs[i] = q.coeffs[i] * power;
            power *= c;
        }
        const RootStructure rp = bc_roots(p);
        const RootStructure rq = bc_roots(q);
        REQUIRE(rp.combined.size() == rq.combined.size());
        std::vector<BiComplex> scaled;
        scaled.reserve(rp.combined.size());
        for (const BiComplex& z : rp.combined) scaled.push_back(z * (1.0 / c));
        CHECK(roots_match(std::span<const BiComplex>(scaled),
                          std::span<const BiComplex>(rq.combined), 1e-7));
    }
}

TEST_CASE("bc_roots residuals scale with coefficient size and degree") {
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int it = 0; it < 200; ++it) {
        const int n = 2 + it % 7;
        BCPoly p;
        for (int i = 0; i < n; ++i)
            p.coeffs.push_back(BiComplex(Cx(u(rng), u(rng)), Cx(u(rng), u(rng))));
        p.coeffs.push_back(BiComplex::one());
        double scale = 1.0;
        for (const BiComplex& c : p.coeffs) scale = std::max(scale, norm(c));
        const RootStructure rs = bc_roots(p);
        REQUIRE(rs.kind == RootStructureKind::CrossProduct);
        for (const BiComplex& z : rs.combined) {
            const double limit = 1e-6 * scale * std::pow(std::max(1.0, norm(z)), n);
            CHECK(norm(evaluate(p, z)) <= limit);
        }
    }
}
