// Serialization of engine results into the machine-readable report grammar
// shared by the command-line tool and the C interface: versioned JSON
// objects or flat CSV tables, byte-identical across runs for identical
// inputs. All scalar payloads use the canonical expression grammar; values
// evaluated at a rational q are emitted as exact rationals, never floats.
#pragma once

#include "braiding.hpp"
#include "verify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qsu2 {

inline constexpr const char* REPORT_SCHEMA = "qsu2-report/1";

enum class ReportFormat { Json, Csv };

// "json" or "csv"; throws std::invalid_argument otherwise.
ReportFormat parse_report_format(const std::string& name);

// Exact rational "p" or "p/r" with a nonzero denominator; throws
// std::invalid_argument on anything else.
mpq_class parse_exact_rational(const std::string& text);

// Nonnegative half integer "j" or "p/2"; returns 2j.
int parse_half_integer(const std::string& text);

// Shared output options: the format plus an optional rational evaluation
// point q0, constrained to (0, 1).
struct ReportOptions {
    ReportFormat format = ReportFormat::Json;
    std::optional<mpq_class> q0;
};

std::string report_verify(const std::vector<CheckResult>& results,
                          const std::vector<std::string>& suites, ReportFormat format);

// Antisymmetrizer spectrum in degree k (1 <= k <= 5) for one direction of
// the braiding: distinct eigenvalues, multiplicities and the rank.
std::string report_spectra(Dir d, int k, const ReportOptions& opt);

// Hodge operator tables in every degree for a named hermitian family.
// Families 'a' and 'c' take a symbolic alpha expression; family 'b' takes
// rational alpha and eps and needs opt.q0 to be the square of a rational.
// m_spec is "auto" (the normalized family-a scale), "symbolic", or an
// expression in the scalar grammar.
std::string report_hodge_table(char family, const std::string& alpha_expr,
                               const std::string& eps_expr, int sign, Dir dir,
                               const std::string& m_spec, const ReportOptions& opt);

// Laplacian spectrum scan over |n| <= nmax, J <= jmax; requires opt.q0.
// side 'L' evaluates the closed form; side 'R' extracts each eigenvalue
// from the action of the right-handed operator and fails loudly if some
// basis element is not an eigenvector.
std::string report_laplacian(const std::string& branch, char side,
                             const std::string& alpha_expr, int nmax,
                             const std::string& jmax, const ReportOptions& opt);

// Classification report for a contraction given as JSON text
//   {"alpha": "...", "beta": "...", "nu": "...", "epsilon": "...",
//    "xi": "...", "gamma": "...", "m": "auto"}
// ("m" is accepted and ignored; classification does not depend on it).
std::string report_classify(const std::string& json_text, Dir dir, const ReportOptions& opt);

// Metric classification; the JSON carries either the 4x4 "entries" table or
// the contraction keys above, in which case the induced metric is built
// first.
std::string report_classify_metric(const std::string& json_text, const ReportOptions& opt);

// Function-algebra oracle tables: which is "casimir", "tangent-ideal",
// "differential", "phi-basis" or "all". ok_out reports whether every row
// checked out.
std::string report_oracle(const std::string& which, const std::string& jmax,
                          const ReportOptions& opt, bool& ok_out);

// The braiding matrix itself, dense, entries in the scalar grammar.
std::string report_export_braiding(Dir d, const ReportOptions& opt);

} // namespace qsu2
