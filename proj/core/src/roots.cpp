#include "bcb/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "bcb/errors.hpp"

namespace bcb {

namespace {

// Fixed seed for restart perturbations; recorded here so reruns are
// reproducible regardless of call order.
constexpr std::uint64_t kRestartSeed = 0xbcb5eedULL;

Cx horner(std::span<const Cx> coeffs, const Cx& x) {
    Cx acc = 0.0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) acc = acc * x + coeffs[static_cast<size_t>(i)];
    return acc;
}

bool residuals_ok(std::span<const Cx> monic, std::span<const Cx> roots, double tol,
                  double scale) {
    const int n = static_cast<int>(roots.size());
    for (const Cx& r : roots) {
        const double limit = tol * scale * std::pow(std::max(1.0, std::abs(r)), n);
        if (std::abs(horner(monic, r)) > limit) return false;
    }
    return true;
}

}  // namespace

void SolverConfig::validate() const {
    if (max_iterations <= 0 || max_restarts <= 0 || !(residual_tol > 0.0) ||
        !(restart_perturbation > 0.0))
        throw BadWeightsError("solver config entries must be positive");
}

int RealPoly::degree() const {
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        if (coeffs[i] != 0.0) return i;
    return -1;
}

double RealPoly::operator()(double x) const {
    double acc = 0.0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) acc = acc * x + coeffs[static_cast<size_t>(i)];
    return acc;
}

double RealPoly::derivative_at(double x) const {
    double acc = 0.0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 1; --i)
        acc = acc * x + static_cast<double>(i) * coeffs[static_cast<size_t>(i)];
    return acc;
}

std::vector<Cx> cx_roots(const CxPoly& p, const SolverConfig& cfg) {
    cfg.validate();
    const int n = p.degree();
    if (n < 1) throw ZeroDegreeError("cx_roots: degree >= 1 required");

    std::vector<Cx> monic(static_cast<size_t>(n) + 1);
    const Cx lead = p.coeffs[static_cast<size_t>(n)];
    for (int i = 0; i <= n; ++i) monic[static_cast<size_t>(i)] = p.coeffs[static_cast<size_t>(i)] / lead;
    monic[static_cast<size_t>(n)] = 1.0;

    if (n == 1) return {-monic[0]};

    double max_ratio = 0.0;
    double scale = 1.0;
    for (int i = 0; i < n; ++i) {
        max_ratio = std::max(max_ratio, std::abs(monic[static_cast<size_t>(i)]));
        scale = std::max(scale, std::abs(monic[static_cast<size_t>(i)]));
    }
    const double base_radius = 1.0 + max_ratio;

    std::mt19937_64 restart_rng(kRestartSeed);
    std::uniform_real_distribution<double> jitter(-1.0, 1.0);

    std::vector<Cx> z(static_cast<size_t>(n));
    for (int attempt = 0; attempt < cfg.max_restarts; ++attempt) {
        double radius = base_radius;
        double phase = 0.3183098861837907;  // asymmetric offset, avoids axis-symmetric stalls
        if (attempt > 0) {
            radius *= 1.0 + cfg.restart_perturbation * (1.0 + jitter(restart_rng));
            phase += jitter(restart_rng);
        }
        for (int k = 0; k < n; ++k) {
            const double angle = 2.0 * std::numbers::pi * k / n + phase;
            z[static_cast<size_t>(k)] = radius * Cx(std::cos(angle), std::sin(angle));
        }

        for (int it = 0; it < cfg.max_iterations; ++it) {
            for (int k = 0; k < n; ++k) {
                Cx denom = 1.0;
                for (int l = 0; l < n; ++l) {
                    if (l == k) continue;
                    denom *= z[static_cast<size_t>(k)] - z[static_cast<size_t>(l)];
                }
                if (denom == 0.0) {
                    // coincident iterates: nudge this one off the cluster
                    z[static_cast<size_t>(k)] += 1e-8 * (1.0 + std::abs(z[static_cast<size_t>(k)])) *
                                                 Cx(std::cos(0.7 * (k + 1)), std::sin(0.7 * (k + 1)));
                    continue;
                }
                z[static_cast<size_t>(k)] -= horner(monic, z[static_cast<size_t>(k)]) / denom;
            }
            if (residuals_ok(monic, z, cfg.residual_tol, scale)) {
                // polish until the sweep stalls: simple roots reach machine
                // accuracy in one or two sweeps, root clusters keep halving
                // their spread (multiplicity m converges like (m-1)/m)
                for (int polish = 0; polish < 60; ++polish) {
                    double max_step = 0.0;
                    for (int k = 0; k < n; ++k) {
                        Cx denom = 1.0;
                        for (int l = 0; l < n; ++l) {
                            if (l == k) continue;
                            denom *= z[static_cast<size_t>(k)] - z[static_cast<size_t>(l)];
                        }
                        if (denom == 0.0) continue;
                        const Cx step = horner(monic, z[static_cast<size_t>(k)]) / denom;
                        z[static_cast<size_t>(k)] -= step;
                        max_step = std::max(max_step,
                                            std::abs(step) / (1.0 + std::abs(z[static_cast<size_t>(k)])));
                    }
                    if (max_step <= 8.0 * std::numeric_limits<double>::epsilon()) break;
                }
                std::sort(z.begin(), z.end(), [](const Cx& a, const Cx& b) {
                    if (a.real() != b.real()) return a.real() < b.real();
                    return a.imag() < b.imag();
                });
                return z;
            }
        }
    }
    throw NoConvergenceError("cx_roots: iteration budget exhausted");
}

double positive_root(const RealPoly& g) {
    const int n = g.degree();
    if (n < 1) throw InvalidSignPatternError("positive_root: degree >= 1 required");
    if (!(g.coeffs[static_cast<size_t>(n)] > 0.0))
        throw InvalidSignPatternError("positive_root: leading coefficient must be positive");
    bool any_negative = false;
    for (int i = 0; i < n; ++i) {
        const double c = g.coeffs[static_cast<size_t>(i)];
        if (c > 0.0)
            throw InvalidSignPatternError("positive_root: lower coefficients must be <= 0");
        if (c < 0.0) any_negative = true;
    }
    if (!any_negative) return 0.0;  // degenerate majorant a_n x^n, sole root 0

    // one descending sign change: g < 0 left of the root, > 0 right of it
    double lo = 0.0;
    double hi = 1.0;
    while (g(hi) <= 0.0) hi *= 2.0;
    while (hi - lo > 1e-13 * (1.0 + hi)) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    double x = hi;
    for (int i = 0; i < 4; ++i) {
        const double d = g.derivative_at(x);
        if (d == 0.0) break;
        const double next = x - g(x) / d;
        if (!(next > 0.0) || !std::isfinite(next)) break;
        x = next;
    }
    return x;
}

RootStructure bc_roots(const BCPoly& p, const SolverConfig& cfg) {
    const auto [f, g] = split_poly(p);
    if (f.degree() < 0 && g.degree() < 0)
        throw ZeroDegreeError("bc_roots: zero polynomial");
    std::vector<Cx> s1, s2;
    if (f.degree() >= 1) s1 = cx_roots(f, cfg);
    if (g.degree() >= 1) s2 = cx_roots(g, cfg);
    return classify_roots(p, std::move(s1), std::move(s2));
}

}  // namespace bcb
