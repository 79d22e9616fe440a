#pragma once

// Front end for the overpart command: tables of counts, the verification
// suite, and single coefficient queries. Everything writes to caller-supplied
// streams so tests can drive it in-process.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "overpart/identities.hpp"
#include "overpart/report.hpp"

namespace overpart::cli {

enum ExitCode : int { exit_ok = 0, exit_mismatch = 1, exit_usage = 2 };

enum class TableKind { pbar, g, p_bounded, p_exact, d, overline_total };
enum class Source { formula, oracle, both };
enum class TableFormat { csv, json };
enum class ReportFormat { text, json };

std::optional<TableKind> parse_table_kind(std::string_view text);
std::string_view to_string(TableKind kind);

struct TableRequest {
  TableKind kind = TableKind::pbar;
  std::optional<int> t;  // ignored for d and overline_total
  int n_max = 1;
  Source source = Source::formula;
  TableFormat format = TableFormat::csv;
};

/// Coefficients 1..n_max of the generating function for `kind`, taken from
/// the closed forms (or the divisor Lambert series where no closed form
/// applies: g_0, p_0, p(n,0), p(n,1)).
QSeries formula_series(TableKind kind, int t, int n_max);

/// The same numbers by brute-force enumeration.
std::vector<BigInt> oracle_values(TableKind kind, int t, int n_max);

int run_table(const TableRequest& req, std::ostream& out, std::ostream& err);

struct VerifyRequest {
  /// A CheckName, or nullopt for all of them.
  std::optional<CheckName> check;
  int t_max = 8;
  int order = 60;
  ReportFormat format = ReportFormat::text;
  ClosedForms forms = ClosedForms::standard();
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 0;
};

/// Runs the selected checks and returns the reports sorted by name, then
/// params. Throws Error(Domain) when the t range selects nothing.
std::vector<VerificationReport> collect_reports(const VerifyRequest& req);

std::string render_json(int order, const std::vector<VerificationReport>& reports);
std::string render_text(const std::vector<VerificationReport>& reports);

int run_verify(const VerifyRequest& req, std::ostream& out, std::ostream& err);

enum class CoeffSource { th1, th2, bk, abr, overline_total, oqbinom };

struct CoeffRequest {
  CoeffSource gf = CoeffSource::th2;
  std::optional<int> t;
  int n = 0;
  std::optional<int> M;
  std::optional<int> N;
};

int run_coeff(const CoeffRequest& req, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace overpart::cli
