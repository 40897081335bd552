#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hvcert/certify.hpp"

namespace hvcert::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.3.0";
/// Default directory for reports when --output is not given.
inline constexpr const char* kOutputDirEnv = "HVCERT_OUTPUT_DIR";

enum class Command { certify, scan, coeffs, integrals, sphere_check, report };
enum class Format { json, csv, markdown };

std::string to_string(Command c);
std::string to_string(Format f);
/// Throw invalid_config on unknown names.
Command parse_command(const std::string& text);
Format parse_format(const std::string& text);

struct Range {
  long lo = 0;
  long hi = 0;
  friend bool operator==(const Range&, const Range&) = default;
};
/// "a..b" or a single integer "a".
Range parse_range(const std::string& text);
std::string to_string(const Range& r);

struct Tolerances {
  double identity = 1e-10;
  double recurrence = 1e-12;
  double sphere = 1e-6;
  double annulus = 0.05;
  friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

struct RunConfig {
  Command command = Command::report;
  std::optional<Range> omega;
  /// Cells below 2 omega + 6 are skipped. Default for scans: up to 400.
  std::optional<Range> n;
  bool symbolic = false;
  certify::MuBranch mu_branch = certify::MuBranch::deg_rbar_equals_omega;
  Tolerances tolerances;
  Format format = Format::json;
  std::string output;  // empty: stdout, or the env directory if set
  int threads = 0;     // 0: machine cores
  std::uint64_t seed = 20240917;
  /// Scan exits 1 when an empty cell is found.
  bool require_nonempty = false;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Throws invalid_config for inverted or negative ranges, bad thread counts
/// and non-positive tolerances.
void validate(const RunConfig& config);
Json to_json(const RunConfig& config);
RunConfig config_from_json(const Json& j);

/// Decimal preview plus exact text; the exact form is "num/den" for
/// rationals and "a+b*sqrt(r)" for surds.
struct ExactValue {
  std::string decimal;
  std::string exact;
  friend bool operator==(const ExactValue&, const ExactValue&) = default;
};

ExactValue exact_value(const algebra::Rational& r);
ExactValue exact_value(const algebra::SurdExpression& s);

/// One certification cell, the fixed entry schema of the reports.
struct CellRow {
  int omega = 0;
  long n = 0;
  bool nonempty = false;
  std::vector<ExactValue> x;
  std::vector<ExactValue> y;
  std::optional<ExactValue> chosen_c;
  std::string status;
  friend bool operator==(const CellRow&, const CellRow&) = default;
};

CellRow cell_row(const certify::IntervalCertificate& cert);
Json to_json(const CellRow& row);
CellRow cell_from_json(const Json& j);

/// Header plus one line per entry, columns in the JSON order. List cells are
/// ';'-separated "exact|decimal" items.
std::string cells_to_csv(const std::vector<CellRow>& rows);
/// Throws invalid_config on malformed input.
std::vector<CellRow> cells_from_csv(const std::string& text);

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  RunConfig config;
  std::vector<CellRow> entries;
  Json summary = Json::object();
  /// Human tables for markdown, and the CSV body of commands without cells.
  std::vector<Table> tables;
  std::vector<std::string> notes;
  /// 0 all checks passed, 1 a mathematical check failed.
  int status = 0;
};

/// Builds the report; throws hvcert::Error on bad configurations.
Report build_report(const RunConfig& config);

std::string render(const Report& report, Format format);
/// Writes to `path`, or to stdout when empty. Throws io_failure.
void emit_report(const Report& report, Format format, const std::string& path, std::ostream& out);

/// Full driver: validates, builds, emits. Returns the exit code 0/1/2 and
/// writes diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Pretty printers for the coefficient tables. Linear factors from
/// `candidates` are pulled out of p, e.g. "4(n-2)(n+3)".
std::string format_polynomial(const algebra::Polynomial& p, const std::vector<algebra::Polynomial>& candidates);
/// "(n^2-49n+36)/(8(n-2)(n+2))".
std::string format_rational_function(const algebra::RationalFunction& f,
                                     const std::vector<algebra::Polynomial>& candidates);
/// "2/3n^2+29/6n+1076/3+2842/(9(n-2))-1104/(n+2)+4601/(9(n+1))"; zero
/// residues are dropped.
std::string format_expansion(const algebra::PartialFractionExpansion& e);
/// "2/3(n+29/8)^2" for a(n+beta)^2.
std::string format_square_bound(const algebra::Rational& a, const algebra::Rational& beta);

/// Resolves the output path from the config and the environment.
std::string resolve_output_path(const RunConfig& config);

}  // namespace hvcert::cli
