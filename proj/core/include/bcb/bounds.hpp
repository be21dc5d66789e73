#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bcb/polynomial.hpp"
#include "bcb/region.hpp"

namespace bcb {

/// The implemented zero-localization bounds. All upper bounds are balls
/// centered at 0 except Walsh (shifted center); LandauLower is an exterior
/// ball (a lower bound on every root norm); ComponentDiscus applies a
/// classical complex bound to each split component separately.
enum class BoundKind {
    Cauchy,
    Lacunary,
    Kojima,
    Ballieu,
    PositiveRoot,
    Fujiwara,
    Walsh,
    LandauLower,
    ComponentDiscus,
};

/// External-interface name ("cauchy", "lacunary", ...).
const char* bound_kind_name(BoundKind kind);
BoundKind bound_kind_from_name(const std::string& name);

/// Auxiliary inputs a bound was evaluated with.
struct BoundParams {
    std::optional<double> r;       ///< lacunary free parameter
    std::optional<double> t;       ///< landau scale parameter
    std::vector<double> weights;   ///< ballieu X interior weights or fujiwara lambda
    std::string base;              ///< component-discus: "cauchy" or "positive-root"
    bool degenerate = false;       ///< all lower coefficients zero (or A_0 not invertible)
    std::string note;
};

struct BoundResult {
    BoundKind kind = BoundKind::Cauchy;
    Region region{};
    BoundParams params{};
};

// Every bound below normalizes p to monic form first and works with the
// quotient norms W_i = |A_i * inverse(A_n)| (positive_root_bound and
// landau_lower_bound use the raw coefficient norms |A_i| as an exception).
// Errors: NonInvertibleLeadingError when A_n is zero or a zero divisor,
// ZeroDegreeError when the degree is < 1, BadWeightsError for malformed
// parameters.

/// Ball of radius 1 + max_v W_v.
BoundResult cauchy_bound(const BCPoly& p);

/// Ball of radius max{r, sum_{i<=p} W_i / r^(n-i-1)} for any r > 0, where p is
/// the largest index < n with a nonzero coefficient.
BoundResult lacunary_bound(const BCPoly& p, double r);

/// lacunary_bound minimized over r by golden-section search on
/// [1e-6, 1 + sum W_i] (200 iterations; r = 1 and the interval ends are also
/// evaluated, so the result never exceeds lacunary_bound(p, 1)).
BoundResult lacunary_bound_optimized(const BCPoly& p);

/// Ball of radius sum_{i=1..n} W_{n-i}^(1/i).
BoundResult kojima_like_bound(const BCPoly& p);

/// Ball of radius max_i {X_i/X_{i+1} + W_i/X_{i+1}} with X_0 = 0, X_n = 1 and
/// caller-supplied positive interior weights X_1..X_{n-1}.
BoundResult ballieu_bound(const BCPoly& p, std::span<const double> interior_weights);

/// Ball whose radius is the unique positive zero of
/// |A_n| x^n - |A_{n-1}| x^{n-1} - ... - |A_0| (raw coefficient norms; call on
/// a monic polynomial for the normalized reading).
BoundResult positive_root_bound(const BCPoly& p);

/// Ball of radius max_i (W_{n-i}/lambda_i)^(1/i) for positive weights summing
/// to 1.
BoundResult fujiwara_bound(const BCPoly& p, std::span<const double> lambda);

/// Ball centered at -A_{n-1}/(2 A_n) of radius |center| + sum_{i>=2} W_{n-i}^(1/i).
BoundResult walsh_region(const BCPoly& p);

/// Exterior ball: every root satisfies |Z| >= |A_0| t / (|A_0| + M) with
/// M = max_{i=1..n} |A_i| t^i, provided A_0 is invertible; radius 0 otherwise
/// (flagged degenerate).
BoundResult landau_lower_bound(const BCPoly& p, double t);

enum class DiscusBase { Cauchy, PositiveRoot };

/// Applies the chosen classical complex bound to each split component and
/// returns the discus of the two radii. Valid whenever both components have
/// degree >= 1 (ComponentDegenerateError otherwise); does not require an
/// invertible bicomplex leading coefficient. This variant provably contains
/// every root.
BoundResult component_discus_bound(const BCPoly& p, DiscusBase base);

}  // namespace bcb
