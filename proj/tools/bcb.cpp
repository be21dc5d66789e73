// bcb: bicomplex polynomial root bounds and their verification harness.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "bcb/bounds.hpp"
#include "bcb/errors.hpp"
#include "bcb/io.hpp"
#include "bcb/roots.hpp"
#include "bcb/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitViolation = 2;
constexpr int kMaxInputDegree = 12;

bcb::BCPoly load_polynomial(const std::string& path) {
    const bcb::BCPoly p = bcb::polynomial_from_json(bcb::read_file(path));
    if (p.degree() > kMaxInputDegree)
        throw bcb::ParseError("polynomial degree exceeds the supported limit of 12");
    return p;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty())
        std::cout << text << '\n';
    else
        bcb::write_file(output_path, text);
}

std::uint64_t env_seed(std::uint64_t fallback) {
    const char* env = std::getenv("BCB_SEED");
    if (!env) return fallback;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        throw bcb::ParseError("BCB_SEED must be an unsigned integer");
    }
}

int run_roots(const std::string& file, const bcb::SolverConfig& solver) {
    const bcb::BCPoly p = load_polynomial(file);
    const bcb::RootStructure rs = bcb::bc_roots(p, solver);
    std::cout << bcb::root_structure_to_json(rs, p) << '\n';
    return kExitOk;
}

int run_bounds(const std::string& file, std::vector<std::string> kinds, double r, double t,
               const std::vector<double>& weights, const std::vector<double>& lambda) {
    const bcb::BCPoly p = load_polynomial(file);
    if (kinds.empty())
        kinds = {"cauchy", "lacunary", "kojima", "ballieu", "positive-root",
                 "fujiwara", "walsh", "landau-lower", "component-discus"};

    std::string out = "[";
    bool first = true;
    const auto append = [&](const bcb::BoundResult& b) {
        if (!first) out += ",\n";
        out += bcb::bound_result_to_json(b);
        first = false;
    };

    for (const std::string& name : kinds) {
        switch (bcb::bound_kind_from_name(name)) {
            case bcb::BoundKind::Cauchy:
                append(bcb::cauchy_bound(p));
                break;
            case bcb::BoundKind::Lacunary:
                append(bcb::lacunary_bound(p, r));
                append(bcb::lacunary_bound_optimized(p));
                break;
            case bcb::BoundKind::Kojima:
                append(bcb::kojima_like_bound(p));
                break;
            case bcb::BoundKind::Ballieu: {
                if (weights.empty()) {
                    const std::vector<double> unit(
                        static_cast<size_t>(std::max(0, p.degree() - 1)), 1.0);
                    append(bcb::ballieu_bound(p, unit));
                } else {
                    append(bcb::ballieu_bound(p, weights));
                }
                break;
            }
            case bcb::BoundKind::PositiveRoot:
                append(bcb::positive_root_bound(p));
                break;
            case bcb::BoundKind::Fujiwara: {
                if (lambda.empty()) {
                    const int n = p.degree();
                    const std::vector<double> uniform(static_cast<size_t>(n), 1.0 / n);
                    append(bcb::fujiwara_bound(p, uniform));
                } else {
                    append(bcb::fujiwara_bound(p, lambda));
                }
                break;
            }
            case bcb::BoundKind::Walsh:
                append(bcb::walsh_region(p));
                break;
            case bcb::BoundKind::LandauLower:
                append(bcb::landau_lower_bound(p, t));
                break;
            case bcb::BoundKind::ComponentDiscus:
                append(bcb::component_discus_bound(p, bcb::DiscusBase::Cauchy));
                append(bcb::component_discus_bound(p, bcb::DiscusBase::PositiveRoot));
                break;
        }
    }
    out += "]";
    std::cout << out << '\n';
    return kExitOk;
}

int run_verify(const std::string& file, double tol) {
    const bcb::BCPoly p = load_polynomial(file);
    bcb::VerificationReport report;
    report.kind = "verify";
    report.tolerance = tol;
    report.config.trials = 1;
    report.config.degree_min = 1;
    report.config.degree_max = std::min(8, std::max(1, p.degree()));
    bcb::TrialRecord rec = bcb::verify_polynomial(p, bcb::SolverConfig{}, tol);
    report.trials.push_back(std::move(rec));
    bcb::finalize_summary(report);
    std::cout << bcb::report_to_json(report) << '\n';
    return report.total_violations() > 0 ? kExitViolation : kExitOk;
}

int run_stress(const bcb::EnsembleConfig& cfg, const std::string& format,
               const std::string& output) {
    const bcb::VerificationReport report = bcb::stress(cfg);
    if (format == "csv")
        emit(bcb::rows_to_csv(bcb::report_rows(report)), output);
    else
        emit(bcb::report_to_json(report), output);
    std::cerr << "stress: " << report.trials.size() << " trials, "
              << report.total_violations() << " violations, "
              << report.counterexamples.size() << " counterexamples\n";
    return report.total_violations() > 0 ? kExitViolation : kExitOk;
}

int run_gershgorin(const bcb::EnsembleConfig& cfg, int size, const std::string& output) {
    const bcb::GershgorinSuiteReport report = bcb::gershgorin_suite(cfg, size);
    emit(bcb::gershgorin_report_to_json(report), output);
    return report.passed() ? kExitOk : kExitViolation;
}

int run_report(const std::string& file, const std::string& format, const std::string& output) {
    const bcb::VerificationReport report = bcb::report_from_json(bcb::read_file(file));
    if (format == "csv")
        emit(bcb::rows_to_csv(bcb::report_rows(report)), output);
    else
        emit(bcb::report_to_json(report), output);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bicomplex polynomial root bounds"};
    app.require_subcommand(1);

    bcb::SolverConfig solver;
    std::string file;
    std::vector<std::string> kinds;
    double r = 1.0;
    double t = 1.0;
    std::vector<double> weights;
    std::vector<double> lambda;
    double tol = 1e-9;
    std::string format = "json";
    std::string output;
    bcb::EnsembleConfig ensemble;
    std::string model = "full-bicomplex";
    int size = 0;

    CLI::App* roots = app.add_subcommand("roots", "compute the bicomplex root structure");
    roots->add_option("file", file, "polynomial JSON file")->required();
    roots->add_option("--max-iterations", solver.max_iterations, "solver iteration budget");
    roots->add_option("--residual-tol", solver.residual_tol, "relative residual tolerance");

    CLI::App* bounds = app.add_subcommand("bounds", "evaluate zero-localization bounds");
    bounds->add_option("file", file, "polynomial JSON file")->required();
    bounds->add_option("--kinds", kinds, "bound kinds (default: all)")->delimiter(',');
    bounds->add_option("--r", r, "lacunary radius parameter");
    bounds->add_option("--t", t, "landau scale parameter");
    bounds->add_option("--weights", weights, "ballieu interior weights")->delimiter(',');
    bounds->add_option("--lambda", lambda, "fujiwara weights (must sum to 1)")->delimiter(',');

    CLI::App* verify = app.add_subcommand("verify", "verify every bound against the roots");
    verify->add_option("file", file, "polynomial JSON file")->required();
    verify->add_option("--tol", tol, "containment tolerance (slack tol*(1+radius))");

    CLI::App* stress = app.add_subcommand("stress", "random-ensemble bound verification");
    stress->add_option("--seed", ensemble.seed, "ensemble seed (BCB_SEED overrides the default)");
    stress->add_option("--trials", ensemble.trials, "number of random polynomials");
    stress->add_option("--degree-min", ensemble.degree_min, "minimum degree");
    stress->add_option("--degree-max", ensemble.degree_max, "maximum degree");
    stress->add_option("--scale", ensemble.coeff_scale, "coefficient component scale");
    stress->add_option("--model", model,
                       "coefficient model: full-bicomplex | complex-only | idempotent-split");
    stress->add_option("--format", format, "output format: json | csv");
    stress->add_option("--output", output, "write the report to a file instead of stdout");

    CLI::App* gersh = app.add_subcommand("gershgorin", "random-matrix localization suite");
    gersh->add_option("--seed", ensemble.seed, "ensemble seed (BCB_SEED overrides the default)");
    gersh->add_option("--trials", ensemble.trials, "number of random matrices");
    gersh->add_option("--size", size, "fixed matrix size 1..6 (0 = varied)");
    gersh->add_option("--scale", ensemble.coeff_scale, "entry component scale");
    gersh->add_option("--model", model, "entry model");
    gersh->add_option("--output", output, "write the report to a file instead of stdout");

    CLI::App* report = app.add_subcommand("report", "re-emit a stored report as json or csv");
    report->add_option("file", file, "report JSON file")->required();
    report->add_option("--format", format, "output format: json | csv");
    report->add_option("--output", output, "write to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (format != "json" && format != "csv")
            throw bcb::ParseError("format must be json or csv");
        if (roots->parsed()) return run_roots(file, solver);
        if (bounds->parsed()) return run_bounds(file, kinds, r, t, weights, lambda);
        if (verify->parsed()) return run_verify(file, tol);
        if (stress->parsed() || gersh->parsed()) {
            ensemble.model = bcb::coefficient_model_from_name(model);
            CLI::App* sub = stress->parsed() ? stress : gersh;
            if (sub->count("--seed") == 0) ensemble.seed = env_seed(ensemble.seed);
            ensemble.validate();
            if (stress->parsed()) return run_stress(ensemble, format, output);
            return run_gershgorin(ensemble, size, output);
        }
        if (report->parsed()) return run_report(file, format, output);
    } catch (const bcb::NoConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
