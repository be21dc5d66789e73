#pragma once

#include <cstdint>
#include <vector>

#include "bcb/polynomial.hpp"

namespace bcb {

/// Knobs for the simultaneous-iteration root solver.
struct SolverConfig {
    int max_iterations = 500;
    double residual_tol = 1e-12;        ///< relative to coefficient scale
    double restart_perturbation = 1e-3; ///< radius jitter between restarts
    int max_restarts = 5;

    void validate() const;
};

/// Real polynomial, ascending coefficients. Used for the majorant
/// |A_n| x^n - |A_{n-1}| x^{n-1} - ... - |A_0| whose unique positive zero
/// bounds the root norms.
struct RealPoly {
    std::vector<double> coeffs;

    RealPoly() = default;
    explicit RealPoly(std::vector<double> c) : coeffs(std::move(c)) {}

    int degree() const;
    double operator()(double x) const;
    double derivative_at(double x) const;
};

/// All roots (with multiplicity) of a complex polynomial of degree >= 1 by
/// Durand-Kerner simultaneous iteration. Deterministic for a fixed config;
/// results are sorted by (real, imag). Every returned root r satisfies
/// |p(r)| <= residual_tol * scale * max(1, |r|)^n where scale is the largest
/// coefficient modulus of the monic-normalized polynomial.
/// Throws NoConvergenceError when the iteration and restart budget runs out.
std::vector<Cx> cx_roots(const CxPoly& p, const SolverConfig& cfg = {});

/// Unique positive root of a real polynomial with one descending sign change
/// (positive leading coefficient, all remaining coefficients <= 0, at least
/// one < 0). Bracketing bisection to width 1e-13*(1+x) followed by a Newton
/// polish. Returns 0 when every lower coefficient is zero (the degenerate
/// majorant x^n). Throws InvalidSignPatternError otherwise.
double positive_root(const RealPoly& g);

/// Splits p, solves each non-degenerate component with cx_roots, and
/// assembles the classified root structure (cross product of the component
/// root sets in the generic case).
RootStructure bc_roots(const BCPoly& p, const SolverConfig& cfg = {});

}  // namespace bcb
