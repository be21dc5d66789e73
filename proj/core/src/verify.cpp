#include "bcb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>

#include "bcb/errors.hpp"

namespace bcb {

namespace {

std::string timestamp_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

std::string format_param(double v) {
    // short labels for the catalog: 0.5, 1, 2, ...
    char buf[32];
    if (v == static_cast<double>(static_cast<long long>(v)))
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
    else
        std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

struct CatalogEntry {
    std::string label;
    BoundResult result;
    bool asserted = false;
    bool skipped = false;
    std::string note;
};

std::vector<double> fujiwara_geometric(int n) {
    std::vector<double> lambda(static_cast<size_t>(n));
    const double total = 1.0 - std::ldexp(1.0, -n);  // sum of 2^-i, i=1..n
    for (int i = 1; i <= n; ++i) lambda[static_cast<size_t>(i) - 1] = std::ldexp(1.0, -i) / total;
    return lambda;
}

std::vector<double> fujiwara_uniform(int n) {
    return std::vector<double>(static_cast<size_t>(n), 1.0 / n);
}

// Builds the full catalog; entries that cannot be computed for this input are
// marked skipped instead of aborting the trial.
std::vector<CatalogEntry> bound_catalog(const BCPoly& p) {
    std::vector<CatalogEntry> entries;
    const int n = p.degree();

    const auto add = [&](std::string label, BoundResult r, bool asserted = false) {
        entries.push_back({std::move(label), std::move(r), asserted, false, ""});
    };
    const auto skip = [&](std::string label, BoundKind kind, std::string why) {
        CatalogEntry e;
        e.label = std::move(label);
        e.result.kind = kind;
        e.skipped = true;
        e.note = std::move(why);
        entries.push_back(std::move(e));
    };

    bool invertible_leading = true;
    try {
        (void)normalize_monic(p);
    } catch (const NonInvertibleLeadingError&) {
        invertible_leading = false;
    }

    if (invertible_leading) {
        add("cauchy", cauchy_bound(p));
        for (double r : {0.5, 1.0, 2.0})
            add("lacunary(r=" + format_param(r) + ")", lacunary_bound(p, r));
        add("lacunary(opt)", lacunary_bound_optimized(p));
        add("kojima", kojima_like_bound(p));

        {
            std::vector<double> unit(static_cast<size_t>(std::max(0, n - 1)), 1.0);
            BoundResult b = ballieu_bound(p, unit);
            b.params.note = "unit-weights";
            add("ballieu(unit)", std::move(b));
        }
        {
            // X_i = W_i needs every interior weight nonzero
            const BCPoly monic = normalize_monic(p);
            std::vector<double> w(static_cast<size_t>(std::max(0, n - 1)));
            bool ok = true;
            for (int i = 1; i < n; ++i) {
                w[static_cast<size_t>(i) - 1] = norm(monic.coeffs[static_cast<size_t>(i)]);
                if (w[static_cast<size_t>(i) - 1] == 0.0) ok = false;
            }
            if (ok) {
                BoundResult b = ballieu_bound(p, w);
                b.params.note = "coefficient-weights";
                add("ballieu(coeff)", std::move(b));
            } else {
                skip("ballieu(coeff)", BoundKind::Ballieu,
                     "zero interior coefficient: coefficient weights undefined");
            }
        }

        add("positive-root", positive_root_bound(normalize_monic(p)));
        {
            BoundResult b = fujiwara_bound(p, fujiwara_geometric(n));
            b.params.note = "geometric-weights";
            add("fujiwara(geometric)", std::move(b));
        }
        {
            BoundResult b = fujiwara_bound(p, fujiwara_uniform(n));
            b.params.note = "uniform-weights";
            add("fujiwara(uniform)", std::move(b));
        }
        add("walsh", walsh_region(p));
        for (double t : {0.5, 1.0, 2.0})
            add("landau(t=" + format_param(t) + ")", landau_lower_bound(p, t));
    } else {
        for (const char* label :
             {"cauchy", "lacunary(r=0.5)", "lacunary(r=1)", "lacunary(r=2)", "lacunary(opt)",
              "kojima", "ballieu(unit)", "ballieu(coeff)", "positive-root",
              "fujiwara(geometric)", "fujiwara(uniform)", "walsh", "landau(t=0.5)",
              "landau(t=1)", "landau(t=2)"})
            skip(label, BoundKind::Cauchy, "leading coefficient not invertible");
    }

    try {
        add("component-discus(cauchy)", component_discus_bound(p, DiscusBase::Cauchy), true);
        add("component-discus(positive-root)",
            component_discus_bound(p, DiscusBase::PositiveRoot), true);
    } catch (const ComponentDegenerateError& e) {
        skip("component-discus(cauchy)", BoundKind::ComponentDiscus, e.what());
        skip("component-discus(positive-root)", BoundKind::ComponentDiscus, e.what());
    }
    return entries;
}

}  // namespace

const char* coefficient_model_name(CoefficientModel m) {
    switch (m) {
        case CoefficientModel::FullBicomplex: return "full-bicomplex";
        case CoefficientModel::ComplexOnly: return "complex-only";
        case CoefficientModel::IdempotentSplit: return "idempotent-split";
    }
    return "unknown";
}

CoefficientModel coefficient_model_from_name(const std::string& name) {
    for (CoefficientModel m : {CoefficientModel::FullBicomplex, CoefficientModel::ComplexOnly,
                               CoefficientModel::IdempotentSplit})
        if (name == coefficient_model_name(m)) return m;
    throw BadWeightsError("unknown coefficient model: " + name);
}

void EnsembleConfig::validate() const {
    if (trials <= 0) throw BadWeightsError("ensemble config: trials must be positive");
    if (degree_min < 1 || degree_min > degree_max || degree_max > 8)
        throw BadWeightsError("ensemble config: need 1 <= degree_min <= degree_max <= 8");
    if (!(coeff_scale > 0.0) || !std::isfinite(coeff_scale))
        throw BadWeightsError("ensemble config: coeff_scale must be positive");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Cx sample_cx(std::mt19937_64& rng, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng)};
}

BiComplex sample_coefficient(std::mt19937_64& rng, double scale, CoefficientModel model) {
    switch (model) {
        case CoefficientModel::ComplexOnly:
            return {sample_cx(rng, scale), Cx(0.0, 0.0)};
        case CoefficientModel::IdempotentSplit:
            return compose_i({sample_cx(rng, scale), sample_cx(rng, scale)});
        case CoefficientModel::FullBicomplex:
        default:
            return {sample_cx(rng, scale), sample_cx(rng, scale)};
    }
}

BCPoly sample_monic_poly(std::mt19937_64& rng, int degree, double scale,
                         CoefficientModel model) {
    BCPoly p;
    p.coeffs.resize(static_cast<size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i)
        p.coeffs[static_cast<size_t>(i)] = sample_coefficient(rng, scale, model);
    p.coeffs[static_cast<size_t>(degree)] = BiComplex::one();
    return p;
}

BCMatrix sample_matrix(std::mt19937_64& rng, int n, double scale, CoefficientModel model) {
    BCMatrix a(n, n);
    for (BiComplex& e : a.entries) e = sample_coefficient(rng, scale, model);
    return a;
}

bool bound_label_asserted(const std::string& label) {
    return label.rfind("component-discus", 0) == 0;
}

TrialRecord verify_polynomial(const BCPoly& p, const SolverConfig& solver, double tol) {
    TrialRecord rec;
    rec.polynomial = p;
    rec.degree = p.degree();

    const RootStructure rs = bc_roots(p, solver);
    rec.root_case = rs.kind;
    if (rs.kind != RootStructureKind::CrossProduct) return rec;  // bounds need a finite root set

    rec.roots = rs.combined;
    rec.max_root_norm = 0.0;
    rec.min_root_norm = std::numeric_limits<double>::infinity();
    for (const BiComplex& z : rec.roots) {
        const double nz = norm(z);
        rec.max_root_norm = std::max(rec.max_root_norm, nz);
        rec.min_root_norm = std::min(rec.min_root_norm, nz);
    }
    if (rec.roots.empty()) rec.min_root_norm = 0.0;

    for (CatalogEntry& entry : bound_catalog(p)) {
        BoundCheck check;
        check.label = entry.label;
        check.kind = entry.result.kind;
        check.region = entry.result.region;
        check.params = entry.result.params;
        check.asserted = entry.asserted;
        check.skipped = entry.skipped;
        check.note = entry.note;
        if (entry.skipped) {
            rec.checks.push_back(std::move(check));
            continue;
        }

        const Region& region = check.region;
        const bool lower = region.kind == RegionKind::ExteriorBall;
        check.reference_norm = lower ? rec.min_root_norm : rec.max_root_norm;

        check.contained = true;
        for (const BiComplex& z : rec.roots)
            if (!region_contains(region, z, tol, tol)) check.contained = false;

        const double radius = region.enclosing_radius();
        if (lower)
            check.tightness = check.reference_norm > 0.0 ? radius / check.reference_norm : 0.0;
        else
            check.tightness = radius > 0.0 ? check.reference_norm / radius : 0.0;
        rec.checks.push_back(std::move(check));
    }
    return rec;
}

void finalize_summary(VerificationReport& report) {
    report.violations.clear();
    report.tightness_mean.clear();
    report.tightness_max.clear();
    report.case_counts.clear();
    std::map<std::string, std::pair<double, int>> tally;
    for (const TrialRecord& rec : report.trials) {
        report.case_counts[root_case_name(rec.root_case)]++;
        for (const BoundCheck& c : rec.checks) {
            if (c.skipped) continue;
            if (!c.contained) report.violations[c.label]++;
            else report.violations.try_emplace(c.label, 0);
            if (c.tightness > 0.0) {
                auto& [sum, count] = tally[c.label];
                sum += c.tightness;
                count += 1;
                auto [it, inserted] = report.tightness_max.try_emplace(c.label, c.tightness);
                if (!inserted) it->second = std::max(it->second, c.tightness);
            }
        }
    }
    for (const auto& [label, acc] : tally)
        report.tightness_mean[label] = acc.first / acc.second;
}

int VerificationReport::total_violations() const {
    int total = 0;
    for (const auto& [label, count] : violations) total += count;
    return total;
}

int VerificationReport::asserted_violations() const {
    int total = 0;
    for (const auto& [label, count] : violations)
        if (bound_label_asserted(label)) total += count;
    return total;
}

VerificationReport stress(const EnsembleConfig& cfg, const SolverConfig& solver, double tol) {
    cfg.validate();
    solver.validate();

    VerificationReport report;
    report.kind = "stress";
    report.generated_at = timestamp_now();
    report.config = cfg;
    report.tolerance = tol;
    report.trials.reserve(static_cast<size_t>(cfg.trials));

    for (int trial = 0; trial < cfg.trials; ++trial) {
        std::mt19937_64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(trial)));
        std::uniform_int_distribution<int> deg(cfg.degree_min, cfg.degree_max);
        const BCPoly p = sample_monic_poly(rng, deg(rng), cfg.coeff_scale, cfg.model);

        TrialRecord rec = verify_polynomial(p, solver, tol);
        rec.trial = trial;
        for (const BoundCheck& c : rec.checks) {
            if (c.skipped || c.contained) continue;
            Counterexample ce;
            ce.seed = cfg.seed;
            ce.trial = trial;
            ce.coefficients = p.coeffs;
            ce.bound_label = c.label;
            ce.radius = c.region.enclosing_radius();
            const bool lower = c.region.kind == RegionKind::ExteriorBall;
            double worst = lower ? std::numeric_limits<double>::infinity() : 0.0;
            for (const BiComplex& z : rec.roots) {
                const double nz = norm(z);
                const bool pick = lower ? nz < worst : nz > worst;
                if (pick) {
                    worst = nz;
                    ce.worst_root = z;
                }
            }
            ce.worst_norm = worst;
            report.counterexamples.push_back(std::move(ce));
        }
        report.trials.push_back(std::move(rec));
    }
    finalize_summary(report);
    return report;
}

BCMatrix fixed_gershgorin_counterexample() {
    BCMatrix a(2, 2);
    a.at(0, 0) = BiComplex::idem_e();
    a.at(0, 1) = BiComplex::idem_e_dagger();
    a.at(1, 0) = BiComplex::zero();
    a.at(1, 1) = 2.0 * BiComplex::idem_e_dagger();
    return a;
}

GershgorinSuiteReport gershgorin_suite(const EnsembleConfig& cfg, int size,
                                       const SolverConfig& solver) {
    cfg.validate();
    if (size < 0 || size > 6)
        throw BadWeightsError("gershgorin_suite: size must be in 0..6 (0 = varied)");

    GershgorinSuiteReport report;
    report.generated_at = timestamp_now();
    report.config = cfg;
    report.size = size;

    const int max_varied = std::min(6, cfg.degree_max);
    for (int trial = 0; trial < cfg.trials; ++trial) {
        std::mt19937_64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(trial)));
        int n = size;
        if (n == 0) {
            std::uniform_int_distribution<int> pick(1, max_varied);
            n = pick(rng);
        }
        const BCMatrix a = sample_matrix(rng, n, cfg.coeff_scale, cfg.model);
        const GershgorinReport g = check_gershgorin(a, solver);
        report.matrices += 1;
        report.eigenvalue_count += static_cast<int>(g.eigenvalues.size());
        for (const EigenLocalization& loc : g.eigenvalues) {
            if (!loc.product_region) report.product_region_failures += 1;
            if (loc.ball_union) report.ball_union_hits += 1;
            if (loc.discus_union) report.discus_union_hits += 1;
        }
    }

    // The zero-divisor matrix [[e, e'], [0, 2e']] is always re-checked: its
    // eigenvalue e + 2e' sits sqrt(2) away from the row-1 center while the
    // Euclidean row radius is only 1/sqrt(2).
    const GershgorinReport fixed = check_gershgorin(fixed_gershgorin_counterexample(), solver);
    report.fixed_case_product_ok = fixed.product_region_all();
    const BiComplex target = compose_i({Cx(1.0, 0.0), Cx(2.0, 0.0)});
    for (const EigenLocalization& loc : fixed.eigenvalues) {
        if (norm(loc.value - target) > 1e-6) continue;
        report.fixed_case_ball_union_miss = !loc.ball_union;
        report.fixed_case_discus_union_miss = !loc.discus_union;
    }
    return report;
}

}  // namespace bcb
