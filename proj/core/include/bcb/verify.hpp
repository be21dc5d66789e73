#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bcb/bounds.hpp"
#include "bcb/eigen.hpp"
#include "bcb/roots.hpp"

namespace bcb {

enum class CoefficientModel {
    FullBicomplex,   ///< all four real components drawn independently
    ComplexOnly,     ///< z2 = 0: reduces every check to the classical complex case
    IdempotentSplit, ///< the two idempotent projections drawn independently
};

const char* coefficient_model_name(CoefficientModel m);
CoefficientModel coefficient_model_from_name(const std::string& name);

/// Random-ensemble configuration shared by the stress and Gershgorin suites.
struct EnsembleConfig {
    std::uint64_t seed = 12345;
    int trials = 100;
    int degree_min = 2;
    int degree_max = 8;
    double coeff_scale = 10.0;
    CoefficientModel model = CoefficientModel::FullBicomplex;

    void validate() const;  // throws BadWeightsError on invalid settings
};

/// Deterministic per-trial seed derivation (splitmix64 over seed and index).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

Cx sample_cx(std::mt19937_64& rng, double scale);
BiComplex sample_coefficient(std::mt19937_64& rng, double scale, CoefficientModel model);
/// Monic polynomial of the given degree with random lower coefficients.
BCPoly sample_monic_poly(std::mt19937_64& rng, int degree, double scale, CoefficientModel model);
BCMatrix sample_matrix(std::mt19937_64& rng, int n, double scale, CoefficientModel model);

/// One bound evaluated against the computed roots.
struct BoundCheck {
    std::string label;          ///< e.g. "lacunary(r=0.5)", "ballieu(unit)"
    BoundKind kind = BoundKind::Cauchy;
    Region region{};
    BoundParams params{};
    bool asserted = false;      ///< provable variant: a violation is a hard failure
    bool skipped = false;       ///< not applicable (with note)
    bool contained = true;
    double reference_norm = 0;  ///< max root norm (upper bounds) / min (lower bound)
    double tightness = 0;       ///< reference/radius for upper, radius/reference for lower
    std::string note;
};

struct TrialRecord {
    int trial = 0;
    int degree = 0;
    RootStructureKind root_case = RootStructureKind::CrossProduct;
    BCPoly polynomial;
    std::vector<BiComplex> roots;
    double max_root_norm = 0;
    double min_root_norm = 0;
    std::vector<BoundCheck> checks;
};

/// Everything needed to re-run a violated check deterministically.
struct Counterexample {
    std::uint64_t seed = 0;
    int trial = 0;
    std::vector<BiComplex> coefficients;
    std::string bound_label;
    double radius = 0;
    BiComplex worst_root{};
    double worst_norm = 0;
};

struct VerificationReport {
    std::string kind;  ///< "verify" or "stress"
    std::string generated_at;  ///< wall-clock stamp; excluded from determinism comparisons
    EnsembleConfig config{};
    double tolerance = 1e-9;
    std::vector<TrialRecord> trials;
    std::map<std::string, int> violations;        ///< per bound label
    std::map<std::string, double> tightness_mean; ///< per bound label, over defined values
    std::map<std::string, double> tightness_max;
    std::map<std::string, int> case_counts;       ///< root-structure case -> count
    std::vector<Counterexample> counterexamples;

    int total_violations() const;
    int asserted_violations() const;
};

/// Labels of the asserted (provable) checks in the standard catalog.
bool bound_label_asserted(const std::string& label);

/// Evaluates the full bound catalog against the roots of one polynomial.
/// Containment slack per comparison is tol*(1 + radius). Polynomials whose
/// leading coefficient is not invertible get every quotient-norm bound
/// skipped with a diagnostic; the component discus bounds still run whenever
/// both components are genuine polynomials. Non-CrossProduct cases skip all
/// bound checks.
TrialRecord verify_polynomial(const BCPoly& p, const SolverConfig& solver = {},
                              double tol = 1e-9);

/// Aggregates verify_polynomial over a random monic ensemble. Deterministic
/// for a fixed config: trial i uses mix_seed(seed, i). A containment
/// violation of any non-skipped check is recorded as a counterexample.
VerificationReport stress(const EnsembleConfig& cfg, const SolverConfig& solver = {},
                          double tol = 1e-9);

/// Summarizes report aggregates (recomputed from the trial records).
void finalize_summary(VerificationReport& report);

struct GershgorinSuiteReport {
    std::string generated_at;
    EnsembleConfig config{};
    int size = 0;  ///< 0 = sizes drawn uniformly in 1..min(6, degree_max)
    int matrices = 0;
    int eigenvalue_count = 0;
    int product_region_failures = 0;
    int ball_union_hits = 0;
    int discus_union_hits = 0;
    bool fixed_case_product_ok = false;
    bool fixed_case_ball_union_miss = false;
    bool fixed_case_discus_union_miss = false;

    /// Product-region membership everywhere, and the pinned zero-divisor
    /// matrix shows the expected ball-union miss while passing the product
    /// check.
    bool passed() const {
        return product_region_failures == 0 && fixed_case_product_ok &&
               fixed_case_ball_union_miss;
    }
};

/// Random-matrix Gershgorin suite. Always includes the fixed zero-divisor
/// matrix [[e, e'], [0, 2e']], whose eigenvalue e + 2e' escapes the Euclidean
/// ball union while both component disks capture it.
GershgorinSuiteReport gershgorin_suite(const EnsembleConfig& cfg, int size = 0,
                                       const SolverConfig& solver = {});

/// The pinned counterexample matrix [[e, e'], [0, 2e']].
BCMatrix fixed_gershgorin_counterexample();

}  // namespace bcb
