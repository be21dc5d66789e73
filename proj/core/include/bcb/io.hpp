#pragma once

#include <string>
#include <vector>

#include "bcb/bounds.hpp"
#include "bcb/matrix.hpp"
#include "bcb/polynomial.hpp"
#include "bcb/verify.hpp"

namespace bcb {

// Interchange formats. A bicomplex value is a 4-array [x0, x1, x2, x3]
// meaning x0 + i*x1 + j*x2 + k*x3; a polynomial file is
//   { "coefficients": [ <value>, ... ] }   (ascending degree)
// where each <value> is a 4-array or a plain real number; a matrix file is
//   { "rows": n, "cols": m, "entries": [ <value>, ... ] }   (row-major).
// All parsers reject non-finite numbers and malformed documents with
// ParseError.

BCPoly polynomial_from_json(const std::string& text);
std::string polynomial_to_json(const BCPoly& p);

BCMatrix matrix_from_json(const std::string& text);
std::string matrix_to_json(const BCMatrix& a);

/// { "kind", "center", "radius" | "radii", "params" }
std::string bound_result_to_json(const BoundResult& r);

/// Root structure of one polynomial, with per-root residual norms |P(Z)|.
std::string root_structure_to_json(const RootStructure& s, const BCPoly& p);

std::string report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const std::string& text);

std::string gershgorin_report_to_json(const GershgorinSuiteReport& report);

/// Flat per-bound row, the CSV projection of a report.
struct BoundRow {
    int trial = 0;
    int degree = 0;
    std::string bound_kind;
    double radius = 0;
    double max_root_norm = 0;
    double tightness = 0;
    bool contained = true;

    friend bool operator==(const BoundRow&, const BoundRow&) = default;
};

std::vector<BoundRow> report_rows(const VerificationReport& report);
/// Header "trial,degree,bound_kind,radius,max_root_norm,tightness,contained";
/// doubles are printed shortest-round-trip, so parse(serialize(rows)) == rows.
std::string rows_to_csv(const std::vector<BoundRow>& rows);
std::vector<BoundRow> rows_from_csv(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace bcb
