#include "bcb/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bcb/errors.hpp"

namespace bcb {

namespace {

using nlohmann::json;

json to_json_value(const BiComplex& z) {
    return json::array({z.x0(), z.x1(), z.x2(), z.x3()});
}

json to_json_value(const Cx& c) { return json::array({c.real(), c.imag()}); }

double finite_number(const json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ParseError(std::string(what) + ": non-finite number");
    return v;
}

BiComplex bicomplex_from(const json& j, const char* what) {
    if (j.is_number()) return BiComplex(finite_number(j, what));
    if (!j.is_array() || j.size() != 4)
        throw ParseError(std::string(what) + ": expected a 4-array [x0, x1, x2, x3] or a real");
    return from_quad(finite_number(j[0], what), finite_number(j[1], what),
                     finite_number(j[2], what), finite_number(j[3], what));
}

json parse_document(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON document");
    return j;
}

json region_to_json(const Region& r) {
    json out;
    out["center"] = to_json_value(r.center);
    if (r.kind == RegionKind::Discus)
        out["radii"] = json::array({r.r1, r.r2});
    else
        out["radius"] = r.r1;
    if (r.kind == RegionKind::ExteriorBall) out["exterior"] = true;
    return out;
}

Region region_from_json(const json& j) {
    const BiComplex center = bicomplex_from(j.at("center"), "region center");
    if (j.contains("radii")) {
        const json& rr = j.at("radii");
        if (!rr.is_array() || rr.size() != 2) throw ParseError("region radii: expected [r1, r2]");
        return Region::discus(center, finite_number(rr[0], "radius"),
                              finite_number(rr[1], "radius"));
    }
    const double r = finite_number(j.at("radius"), "radius");
    if (j.value("exterior", false)) return Region::exterior_ball(center, r);
    return Region::ball(center, r);
}

json params_to_json(const BoundParams& p) {
    json out = json::object();
    if (p.r) out["r"] = *p.r;
    if (p.t) out["t"] = *p.t;
    if (!p.weights.empty()) out["weights"] = p.weights;
    if (!p.base.empty()) out["base"] = p.base;
    if (p.degenerate) out["degenerate"] = true;
    if (!p.note.empty()) out["note"] = p.note;
    return out;
}

BoundParams params_from_json(const json& j) {
    BoundParams p;
    if (j.contains("r")) p.r = finite_number(j.at("r"), "params.r");
    if (j.contains("t")) p.t = finite_number(j.at("t"), "params.t");
    if (j.contains("weights"))
        for (const json& w : j.at("weights")) p.weights.push_back(finite_number(w, "weight"));
    p.base = j.value("base", "");
    p.degenerate = j.value("degenerate", false);
    p.note = j.value("note", "");
    return p;
}

json check_to_json(const BoundCheck& c) {
    json out;
    out["label"] = c.label;
    out["kind"] = bound_kind_name(c.kind);
    if (c.skipped) {
        out["skipped"] = true;
        out["note"] = c.note;
        return out;
    }
    out["region"] = region_to_json(c.region);
    out["params"] = params_to_json(c.params);
    out["asserted"] = c.asserted;
    out["contained"] = c.contained;
    out["radius"] = c.region.enclosing_radius();
    out["reference_norm"] = c.reference_norm;
    out["tightness"] = c.tightness;
    if (!c.note.empty()) out["note"] = c.note;
    return out;
}

BoundCheck check_from_json(const json& j) {
    BoundCheck c;
    c.label = j.at("label").get<std::string>();
    c.kind = bound_kind_from_name(j.at("kind").get<std::string>());
    c.note = j.value("note", "");
    if (j.value("skipped", false)) {
        c.skipped = true;
        return c;
    }
    c.region = region_from_json(j.at("region"));
    c.params = params_from_json(j.at("params"));
    c.asserted = j.value("asserted", false);
    c.contained = j.at("contained").get<bool>();
    c.reference_norm = finite_number(j.at("reference_norm"), "reference_norm");
    c.tightness = finite_number(j.at("tightness"), "tightness");
    return c;
}

json trial_to_json(const TrialRecord& t) {
    json out;
    out["trial"] = t.trial;
    out["degree"] = t.degree;
    out["case"] = root_case_name(t.root_case);
    json coeffs = json::array();
    for (const BiComplex& c : t.polynomial.coeffs) coeffs.push_back(to_json_value(c));
    out["polynomial"] = std::move(coeffs);
    json roots = json::array();
    for (const BiComplex& z : t.roots) roots.push_back(to_json_value(z));
    out["roots"] = std::move(roots);
    out["max_root_norm"] = t.max_root_norm;
    out["min_root_norm"] = t.min_root_norm;
    json checks = json::array();
    for (const BoundCheck& c : t.checks) checks.push_back(check_to_json(c));
    out["bounds"] = std::move(checks);
    return out;
}

TrialRecord trial_from_json(const json& j) {
    TrialRecord t;
    t.trial = j.at("trial").get<int>();
    t.degree = j.at("degree").get<int>();
    t.root_case = root_case_from_name(j.at("case").get<std::string>());
    for (const json& c : j.at("polynomial"))
        t.polynomial.coeffs.push_back(bicomplex_from(c, "coefficient"));
    for (const json& z : j.at("roots")) t.roots.push_back(bicomplex_from(z, "root"));
    t.max_root_norm = finite_number(j.at("max_root_norm"), "max_root_norm");
    t.min_root_norm = finite_number(j.at("min_root_norm"), "min_root_norm");
    for (const json& c : j.at("bounds")) t.checks.push_back(check_from_json(c));
    return t;
}

json config_to_json(const EnsembleConfig& cfg) {
    json out;
    out["seed"] = cfg.seed;
    out["trials"] = cfg.trials;
    out["degree_min"] = cfg.degree_min;
    out["degree_max"] = cfg.degree_max;
    out["coeff_scale"] = cfg.coeff_scale;
    out["model"] = coefficient_model_name(cfg.model);
    return out;
}

EnsembleConfig config_from_json(const json& j) {
    EnsembleConfig cfg;
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.trials = j.at("trials").get<int>();
    cfg.degree_min = j.at("degree_min").get<int>();
    cfg.degree_max = j.at("degree_max").get<int>();
    cfg.coeff_scale = finite_number(j.at("coeff_scale"), "coeff_scale");
    cfg.model = coefficient_model_from_name(j.at("model").get<std::string>());
    return cfg;
}

json counterexample_to_json(const Counterexample& ce) {
    json out;
    out["seed"] = ce.seed;
    out["trial"] = ce.trial;
    json coeffs = json::array();
    for (const BiComplex& c : ce.coefficients) coeffs.push_back(to_json_value(c));
    out["coefficients"] = std::move(coeffs);
    out["bound"] = ce.bound_label;
    out["radius"] = ce.radius;
    out["root"] = to_json_value(ce.worst_root);
    out["root_norm"] = ce.worst_norm;
    return out;
}

Counterexample counterexample_from_json(const json& j) {
    Counterexample ce;
    ce.seed = j.at("seed").get<std::uint64_t>();
    ce.trial = j.at("trial").get<int>();
    for (const json& c : j.at("coefficients"))
        ce.coefficients.push_back(bicomplex_from(c, "coefficient"));
    ce.bound_label = j.at("bound").get<std::string>();
    ce.radius = finite_number(j.at("radius"), "radius");
    ce.worst_root = bicomplex_from(j.at("root"), "root");
    ce.worst_norm = finite_number(j.at("root_norm"), "root_norm");
    return ce;
}

std::string shortest_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

BCPoly polynomial_from_json(const std::string& text) {
    const json j = parse_document(text);
    if (!j.is_object() || !j.contains("coefficients"))
        throw ParseError("polynomial document: expected { \"coefficients\": [...] }");
    const json& coeffs = j.at("coefficients");
    if (!coeffs.is_array() || coeffs.empty())
        throw ParseError("polynomial document: coefficients must be a non-empty array");
    BCPoly p;
    p.coeffs.reserve(coeffs.size());
    for (const json& c : coeffs) p.coeffs.push_back(bicomplex_from(c, "coefficient"));
    return p;
}

std::string polynomial_to_json(const BCPoly& p) {
    json coeffs = json::array();
    for (const BiComplex& c : p.coeffs) coeffs.push_back(to_json_value(c));
    json out;
    out["coefficients"] = std::move(coeffs);
    return out.dump(2);
}

BCMatrix matrix_from_json(const std::string& text) {
    const json j = parse_document(text);
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix document: expected { \"rows\", \"cols\", \"entries\" }");
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    if (rows <= 0 || cols <= 0) throw ParseError("matrix document: dimensions must be positive");
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != static_cast<size_t>(rows) * cols)
        throw ParseError("matrix document: entries length must be rows*cols");
    BCMatrix a(rows, cols);
    for (size_t k = 0; k < entries.size(); ++k)
        a.entries[k] = bicomplex_from(entries[k], "matrix entry");
    return a;
}

std::string matrix_to_json(const BCMatrix& a) {
    json entries = json::array();
    for (const BiComplex& e : a.entries) entries.push_back(to_json_value(e));
    json out;
    out["rows"] = a.rows;
    out["cols"] = a.cols;
    out["entries"] = std::move(entries);
    return out.dump(2);
}

std::string bound_result_to_json(const BoundResult& r) {
    json out;
    out["kind"] = bound_kind_name(r.kind);
    out["center"] = to_json_value(r.region.center);
    if (r.region.kind == RegionKind::Discus)
        out["radii"] = json::array({r.region.r1, r.region.r2});
    else
        out["radius"] = r.region.r1;
    if (r.region.kind == RegionKind::ExteriorBall) out["exterior"] = true;
    out["params"] = params_to_json(r.params);
    return out.dump(2);
}

std::string root_structure_to_json(const RootStructure& s, const BCPoly& p) {
    json out;
    out["case"] = root_case_name(s.kind);
    if (s.component1_free())
        out["component1"] = "C";
    else {
        json arr = json::array();
        for (const Cx& r : s.component1) arr.push_back(to_json_value(r));
        out["component1"] = std::move(arr);
    }
    if (s.component2_free())
        out["component2"] = "C";
    else {
        json arr = json::array();
        for (const Cx& r : s.component2) arr.push_back(to_json_value(r));
        out["component2"] = std::move(arr);
    }
    json combined = json::array();
    json residuals = json::array();
    for (const BiComplex& z : s.combined) {
        combined.push_back(to_json_value(z));
        residuals.push_back(norm(evaluate(p, z)));
    }
    out["combined"] = std::move(combined);
    out["residuals"] = std::move(residuals);
    return out.dump(2);
}

std::string report_to_json(const VerificationReport& report) {
    json out;
    out["schema"] = "bcb-report-v1";
    out["kind"] = report.kind;
    out["generated_at"] = report.generated_at;
    out["config"] = config_to_json(report.config);
    out["tolerance"] = report.tolerance;
    json trials = json::array();
    for (const TrialRecord& t : report.trials) trials.push_back(trial_to_json(t));
    out["trials"] = std::move(trials);
    json summary;
    summary["violations"] = report.violations;
    summary["tightness_mean"] = report.tightness_mean;
    summary["tightness_max"] = report.tightness_max;
    summary["case_counts"] = report.case_counts;
    out["summary"] = std::move(summary);
    json ces = json::array();
    for (const Counterexample& ce : report.counterexamples)
        ces.push_back(counterexample_to_json(ce));
    out["counterexamples"] = std::move(ces);
    return out.dump(2);
}

VerificationReport report_from_json(const std::string& text) {
    const json j = parse_document(text);
    if (!j.is_object() || j.value("schema", "") != "bcb-report-v1")
        throw ParseError("report document: missing schema bcb-report-v1");
    VerificationReport report;
    report.kind = j.at("kind").get<std::string>();
    report.generated_at = j.value("generated_at", "");
    report.config = config_from_json(j.at("config"));
    report.tolerance = finite_number(j.at("tolerance"), "tolerance");
    for (const json& t : j.at("trials")) report.trials.push_back(trial_from_json(t));
    const json& summary = j.at("summary");
    report.violations = summary.at("violations").get<std::map<std::string, int>>();
    report.tightness_mean =
        summary.at("tightness_mean").get<std::map<std::string, double>>();
    report.tightness_max = summary.at("tightness_max").get<std::map<std::string, double>>();
    report.case_counts = summary.at("case_counts").get<std::map<std::string, int>>();
    for (const json& ce : j.at("counterexamples"))
        report.counterexamples.push_back(counterexample_from_json(ce));
    return report;
}

std::string gershgorin_report_to_json(const GershgorinSuiteReport& report) {
    json out;
    out["schema"] = "bcb-gershgorin-v1";
    out["generated_at"] = report.generated_at;
    out["config"] = config_to_json(report.config);
    out["size"] = report.size;
    out["matrices"] = report.matrices;
    out["eigenvalues"] = report.eigenvalue_count;
    out["product_region_failures"] = report.product_region_failures;
    out["ball_union_hits"] = report.ball_union_hits;
    out["discus_union_hits"] = report.discus_union_hits;
    json fixed;
    fixed["product_region_ok"] = report.fixed_case_product_ok;
    fixed["ball_union_miss"] = report.fixed_case_ball_union_miss;
    fixed["discus_union_miss"] = report.fixed_case_discus_union_miss;
    out["fixed_counterexample"] = std::move(fixed);
    out["passed"] = report.passed();
    return out.dump(2);
}

std::vector<BoundRow> report_rows(const VerificationReport& report) {
    std::vector<BoundRow> rows;
    for (const TrialRecord& t : report.trials)
        for (const BoundCheck& c : t.checks) {
            if (c.skipped) continue;
            BoundRow row;
            row.trial = t.trial;
            row.degree = t.degree;
            row.bound_kind = c.label;
            row.radius = c.region.enclosing_radius();
            row.max_root_norm = c.reference_norm;
            row.tightness = c.tightness;
            row.contained = c.contained;
            rows.push_back(std::move(row));
        }
    return rows;
}

std::string rows_to_csv(const std::vector<BoundRow>& rows) {
    std::ostringstream out;
    out << "trial,degree,bound_kind,radius,max_root_norm,tightness,contained\n";
    for (const BoundRow& r : rows)
        out << r.trial << ',' << r.degree << ',' << r.bound_kind << ','
            << shortest_double(r.radius) << ',' << shortest_double(r.max_root_norm) << ','
            << shortest_double(r.tightness) << ',' << (r.contained ? "true" : "false") << '\n';
    return out.str();
}

std::vector<BoundRow> rows_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) ||
        line != "trial,degree,bound_kind,radius,max_root_norm,tightness,contained")
        throw ParseError("csv: missing or unexpected header");
    std::vector<BoundRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 7) throw ParseError("csv: expected 7 fields per row");
        BoundRow row;
        const auto to_int = [](const std::string& s, const char* what) {
            int v = 0;
            const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
            if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
                throw ParseError(std::string("csv: bad integer in ") + what);
            return v;
        };
        const auto to_double = [](const std::string& s, const char* what) {
            double v = 0;
            const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
            if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
                throw ParseError(std::string("csv: bad number in ") + what);
            if (!std::isfinite(v)) throw ParseError(std::string("csv: non-finite ") + what);
            return v;
        };
        row.trial = to_int(fields[0], "trial");
        row.degree = to_int(fields[1], "degree");
        row.bound_kind = fields[2];
        row.radius = to_double(fields[3], "radius");
        row.max_root_norm = to_double(fields[4], "max_root_norm");
        row.tightness = to_double(fields[5], "tightness");
        if (fields[6] == "true")
            row.contained = true;
        else if (fields[6] == "false")
            row.contained = false;
        else
            throw ParseError("csv: contained must be true/false");
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

}  // namespace bcb
