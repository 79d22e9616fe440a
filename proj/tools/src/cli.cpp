#include "overpart/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "overpart/enumeration.hpp"
#include "overpart/qfunctions.hpp"

namespace overpart::cli {

namespace {

constexpr std::pair<TableKind, std::string_view> kTableKinds[] = {
    {TableKind::pbar, "pbar"}, {TableKind::g, "g"},
    {TableKind::p_bounded, "p_bounded"}, {TableKind::p_exact, "p_exact"},
    {TableKind::d, "d"}, {TableKind::overline_total, "overline_total"},
};

bool uses_t(TableKind kind) { return kind != TableKind::d && kind != TableKind::overline_total; }

// Quoted and escaped JSON string.
std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

// Exact decimal for integers; "a/b" otherwise.
std::string decimal(const Rational& r) { return r.get_str(); }

std::string json_number(const Rational& r) { return r.get_den() == 1 ? r.get_str() : quote(r.get_str()); }

// sum_n n q^n
QSeries identity_series(Exponent prec) {
  std::vector<Rational> c(static_cast<std::size_t>(prec));
  for (Exponent n = 1; n < prec; ++n) c[static_cast<std::size_t>(n)] = Rational(n);
  return QSeries::from_coefficients(0, std::move(c));
}

int usage_error(std::ostream& err, const std::string& what) {
  err << "error: " << what << '\n';
  return exit_usage;
}

}  // namespace

std::optional<TableKind> parse_table_kind(std::string_view text) {
  for (const auto& [kind, name] : kTableKinds) {
    if (name == text) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(TableKind kind) {
  for (const auto& [k, name] : kTableKinds) {
    if (k == kind) return name;
  }
  return "?";
}

QSeries formula_series(TableKind kind, int t, int n_max) {
  if (n_max < 1) throw Error(ErrorKind::Domain, "n-max must be at least 1");
  if (uses_t(kind) && t < 0) throw Error(ErrorKind::Domain, "t must be non-negative");
  const Exponent prec = static_cast<Exponent>(n_max) + 1;
  switch (kind) {
    case TableKind::pbar: return gf_pbar(t, prec);
    case TableKind::g: return t == 0 ? divisor_lambert_series(prec) : gf_G(t, prec);
    case TableKind::p_bounded: return t == 0 ? divisor_lambert_series(prec) : gf_bk(t, prec);
    case TableKind::p_exact:
      if (t == 0) return divisor_lambert_series(prec);
      if (t == 1) return identity_series(prec) - divisor_lambert_series(prec);
      return gf_abr(t, prec);
    case TableKind::d: return divisor_lambert_series(prec);
    case TableKind::overline_total: return gf_overline_total(prec);
  }
  throw Error(ErrorKind::Domain, "unknown table kind");
}

std::vector<BigInt> oracle_values(TableKind kind, int t, int n_max) {
  if (n_max < 1) throw Error(ErrorKind::Domain, "n-max must be at least 1");
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    switch (kind) {
      case TableKind::pbar: out.push_back(count_opbar_bounded(n, t)); break;
      case TableKind::g: out.push_back(count_g(n, t)); break;
      case TableKind::p_bounded: out.push_back(count_p_bounded_diff(n, t)); break;
      case TableKind::p_exact: out.push_back(count_p_exact_diff(n, t)); break;
      case TableKind::d: out.push_back(divisor_count(n)); break;
      case TableKind::overline_total: out.push_back(count_opbar_total(n)); break;
    }
  }
  return out;
}

int run_table(const TableRequest& req, std::ostream& out, std::ostream& err) {
  if (uses_t(req.kind) && !req.t) return usage_error(err, "--t is required for kind " + std::string(to_string(req.kind)));
  const int t = uses_t(req.kind) ? *req.t : 0;
  std::optional<QSeries> formula;
  std::vector<BigInt> oracle;
  try {
    if (req.source != Source::oracle) formula = formula_series(req.kind, t, req.n_max);
    if (req.source != Source::formula) oracle = oracle_values(req.kind, t, req.n_max);
  } catch (const Error& e) {
    return usage_error(err, e.what());
  }

  bool all_match = true;
  bool integral = true;
  std::ostringstream body;
  const bool csv = req.format == TableFormat::csv;
  if (csv) {
    body << (req.source == Source::both ? "n,formula,oracle,match" : "n,value") << '\n';
  } else {
    body << "{\"kind\":" << quote(std::string(to_string(req.kind))) << ",\"t\":";
    if (uses_t(req.kind)) body << t; else body << "null";
    body << ",\"source\":"
         << quote(req.source == Source::formula ? "formula" : req.source == Source::oracle ? "oracle" : "both")
         << ",\"rows\":[";
  }
  for (int n = 1; n <= req.n_max; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    std::optional<Rational> f;
    if (formula) {
      f = formula->coeff(n);
      if (f->get_den() != 1) integral = false;
    }
    const std::optional<Rational> o = oracle.empty() ? std::nullopt : std::optional<Rational>(Rational(oracle[i]));
    const bool match = !(f && o) || *f == *o;
    all_match = all_match && match;
    if (csv) {
      body << n;
      if (f) body << ',' << decimal(*f);
      if (o) body << ',' << decimal(*o);
      if (f && o) body << ',' << (match ? "true" : "false");
      body << '\n';
    } else {
      body << (n > 1 ? "," : "") << "{\"n\":" << n;
      if (req.source == Source::both) {
        body << ",\"formula\":" << json_number(*f) << ",\"oracle\":" << json_number(*o)
             << ",\"match\":" << (match ? "true" : "false");
      } else {
        body << ",\"value\":" << json_number(f ? *f : *o);
      }
      body << '}';
    }
  }
  if (!csv) body << "]}\n";
  out << body.str();
  if (!integral) err << "warning: formula produced a non-integer coefficient\n";
  if (!all_match) err << "formula and oracle disagree\n";
  return all_match && integral ? exit_ok : exit_mismatch;
}

namespace {

struct Domain {
  CheckName name;
  int min_t;
};

constexpr Domain kDomains[] = {
    {CheckName::th1, 1},      {CheckName::th2, 0},        {CheckName::bk, 1},    {CheckName::abr, 2},
    {CheckName::oqbinom, 0},  {CheckName::relation, 1},   {CheckName::cases, 1}, {CheckName::proofchain, 1},
    {CheckName::chu, 0},      {CheckName::corollary, 0},
};

using Job = std::function<VerificationReport()>;

Job make_job(CheckName name, int t, int order, const ClosedForms& forms) {
  switch (name) {
    case CheckName::th1: return [=] { return check_th1(t, order, forms); };
    case CheckName::th2: return [=] { return check_th2(t, order, forms); };
    case CheckName::bk: return [=] { return check_bk(t, order, forms); };
    case CheckName::abr: return [=] { return check_abr(t, order, forms); };
    case CheckName::oqbinom: return [=] { return check_oqbinom_pbar(t, order, forms); };
    case CheckName::relation: return [=] { return check_pbar_g_relation(t, order, forms); };
    case CheckName::cases: return [=] { return check_three_cases(t, order, forms); };
    case CheckName::proofchain: return [=] { return proof_chain_theorem1(t, order, {}, forms); };
    case CheckName::chu:
      return [=] {
        return verify_chu(QMonomial(Rational(-1), 0), t, QMonomial::minus_q_power(1), static_cast<Exponent>(order) + 1);
      };
    case CheckName::corollary: return [=] { return check_corollary(t, order, forms); };
  }
  throw Error(ErrorKind::Domain, "unknown check");
}

std::string sort_key(const IdentityCheck& c) { return std::string(to_string(c.name)); }

void write_params(std::ostream& os, const IdentityCheck& c) {
  os << '{';
  bool first = true;
  for (const auto& [key, value] : c.params) {
    os << (first ? "" : ",") << quote(key) << ':';
    first = false;
    if (const auto* i = std::get_if<std::int64_t>(&value)) {
      os << *i;
    } else {
      os << quote(std::get<std::string>(value));
    }
  }
  os << '}';
}

std::string param_text(const IdentityCheck& c) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : c.params) {
    os << (first ? "" : " ") << key << '=';
    first = false;
    std::visit([&](const auto& v) { os << v; }, value);
  }
  return os.str();
}

}  // namespace

std::vector<VerificationReport> collect_reports(const VerifyRequest& req) {
  if (req.order < 1) throw Error(ErrorKind::Domain, "order must be at least 1");
  std::vector<Job> jobs;
  for (const auto& [name, lowest] : kDomains) {
    if (req.check && *req.check != name) continue;
    for (int t = lowest; t <= req.t_max; ++t) jobs.push_back(make_job(name, t, req.order, req.forms));
  }
  if (jobs.empty()) {
    throw Error(ErrorKind::Domain, "no t in [domain minimum, " + std::to_string(req.t_max) + "] for the selected check");
  }

  std::vector<VerificationReport> reports(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) reports[i] = jobs[i]();
  };
  unsigned threads = req.jobs ? req.jobs : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::stable_sort(reports.begin(), reports.end(), [](const VerificationReport& a, const VerificationReport& b) {
    const auto ka = sort_key(a.check);
    const auto kb = sort_key(b.check);
    if (ka != kb) return ka < kb;
    return a.check.params < b.check.params;
  });
  return reports;
}

std::string render_json(int order, const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "{\"order\":" << order << ",\"checks\":[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    os << (i ? "," : "") << "{\"name\":" << quote(std::string(to_string(r.check.name))) << ",\"params\":";
    write_params(os, r.check);
    os << ",\"status\":" << quote(std::string(to_string(r.status))) << ",\"first_mismatch\":";
    if (r.first_mismatch) {
      os << "{\"exponent\":" << r.first_mismatch->exponent << ",\"lhs\":" << quote(r.first_mismatch->lhs)
         << ",\"rhs\":" << quote(r.first_mismatch->rhs) << '}';
    } else {
      os << "null";
    }
    os << ",\"message\":" << quote(r.message) << '}';
  }
  os << "]}\n";
  return os.str();
}

std::string render_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& r : reports) {
    if (r.passed()) ++passed;
    os << (r.status == Status::pass ? "PASS " : r.status == Status::fail ? "FAIL " : "ERROR") << ' '
       << to_string(r.check.name) << ' ' << param_text(r.check) << " order=" << r.check.order;
    if (r.first_mismatch) {
      os << "  q^" << r.first_mismatch->exponent << ": " << r.first_mismatch->lhs << " != " << r.first_mismatch->rhs;
    }
    if (!r.passed() && !r.message.empty()) os << "  (" << r.message << ')';
    os << '\n';
  }
  os << passed << '/' << reports.size() << " checks passed\n";
  return os.str();
}

int run_verify(const VerifyRequest& req, std::ostream& out, std::ostream& err) {
  std::vector<VerificationReport> reports;
  try {
    reports = collect_reports(req);
  } catch (const Error& e) {
    return usage_error(err, e.what());
  }
  out << (req.format == ReportFormat::json ? render_json(req.order, reports) : render_text(reports));
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  return ok ? exit_ok : exit_mismatch;
}

int run_coeff(const CoeffRequest& req, std::ostream& out, std::ostream& err) {
  const bool needs_t = req.gf != CoeffSource::overline_total && req.gf != CoeffSource::oqbinom;
  if (needs_t && !req.t) return usage_error(err, "--t is required for this generating function");
  if (req.gf == CoeffSource::oqbinom && (!req.M || !req.N)) return usage_error(err, "oqbinom needs --M and --N");
  if (req.n < 0) return usage_error(err, "n must be non-negative");
  Rational value;
  try {
    const Exponent prec = static_cast<Exponent>(req.n) + 1;
    switch (req.gf) {
      case CoeffSource::th1: value = gf_G(*req.t, prec).coeff(req.n); break;
      case CoeffSource::th2: value = gf_pbar(*req.t, prec).coeff(req.n); break;
      case CoeffSource::bk: value = gf_bk(*req.t, prec).coeff(req.n); break;
      case CoeffSource::abr: value = gf_abr(*req.t, prec).coeff(req.n); break;
      case CoeffSource::overline_total: value = gf_overline_total(prec).coeff(req.n); break;
      case CoeffSource::oqbinom: {
        if (*req.M < 0 || *req.N < 0) throw Error(ErrorKind::Domain, "M and N must be non-negative");
        const Exponent top = static_cast<Exponent>(*req.M) * *req.N;
        value = req.n > top ? Rational(0) : over_qbinom_sum(*req.M, *req.N).coeff(req.n);
        break;
      }
    }
  } catch (const Error& e) {
    return usage_error(err, e.what());
  }
  out << value.get_str() << '\n';
  if (value.get_den() != 1) {
    err << "warning: coefficient is not an integer\n";
    return exit_mismatch;
  }
  return exit_ok;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series tables and identity checks for bounded-difference overpartitions", "overpart"};
  app.require_subcommand(1);

  const std::map<std::string, TableKind> kinds = {
      {"pbar", TableKind::pbar}, {"g", TableKind::g}, {"p_bounded", TableKind::p_bounded},
      {"p_exact", TableKind::p_exact}, {"d", TableKind::d}, {"overline_total", TableKind::overline_total}};
  const std::map<std::string, Source> sources = {
      {"formula", Source::formula}, {"oracle", Source::oracle}, {"both", Source::both}};
  const std::map<std::string, TableFormat> table_formats = {{"csv", TableFormat::csv}, {"json", TableFormat::json}};
  const std::map<std::string, ReportFormat> report_formats = {{"text", ReportFormat::text},
                                                              {"json", ReportFormat::json}};
  const std::map<std::string, CoeffSource> gfs = {
      {"th1", CoeffSource::th1}, {"th2", CoeffSource::th2}, {"bk", CoeffSource::bk}, {"abr", CoeffSource::abr},
      {"overline_total", CoeffSource::overline_total}, {"oqbinom", CoeffSource::oqbinom}};

  const auto keys = [](const auto& map) {
    std::vector<std::string> out;
    for (const auto& entry : map) out.push_back(entry.first);
    return out;
  };

  TableRequest table;
  std::string table_kind;
  std::string table_source = "formula";
  std::string table_format = "csv";
  int table_t = 0;
  auto* table_cmd = app.add_subcommand("table", "Print n and the count for n = 1..n-max");
  table_cmd->add_option("--kind", table_kind, "pbar, g, p_bounded, p_exact, d or overline_total")
      ->required()
      ->check(CLI::IsMember(keys(kinds)));
  auto* table_t_opt = table_cmd->add_option("--t", table_t, "Difference bound");
  table_cmd->add_option("--n-max", table.n_max, "Last n")->required()->check(CLI::PositiveNumber);
  table_cmd->add_option("--source", table_source, "formula, oracle or both")->check(CLI::IsMember(keys(sources)));
  table_cmd->add_option("--format", table_format, "csv or json")->check(CLI::IsMember(keys(table_formats)));

  VerifyRequest verify;
  std::string selector = "all";
  std::string verify_format = "text";
  std::vector<std::string> selectors{"all"};
  for (const auto& [name, lowest] : kDomains) selectors.emplace_back(to_string(name));
  auto* verify_cmd = app.add_subcommand("verify", "Run identity checks against the oracles");
  verify_cmd->add_option("--check", selector, "Check to run, or all")->check(CLI::IsMember(selectors));
  verify_cmd->add_option("--t-max", verify.t_max, "Largest t")->capture_default_str();
  verify_cmd->add_option("--order", verify.order, "Compare through q^order")->capture_default_str();
  verify_cmd->add_option("--format", verify_format, "text or json")->check(CLI::IsMember(keys(report_formats)));
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads (0 = all cores)");

  CoeffRequest coeff;
  std::string coeff_gf;
  int coeff_t = 0;
  int coeff_m = 0;
  int coeff_n_box = 0;
  auto* coeff_cmd = app.add_subcommand("coeff", "Print one coefficient of a generating function");
  coeff_cmd->add_option("--gf", coeff_gf, "th1, th2, bk, abr, overline_total or oqbinom")
      ->required()
      ->check(CLI::IsMember(keys(gfs)));
  auto* coeff_t_opt = coeff_cmd->add_option("--t", coeff_t, "Difference bound");
  coeff_cmd->add_option("--n", coeff.n, "Exponent")->required();
  auto* m_opt = coeff_cmd->add_option("--M", coeff_m, "Box width for oqbinom");
  auto* n_opt = coeff_cmd->add_option("--N", coeff_n_box, "Box height for oqbinom");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  if (table_cmd->parsed()) {
    table.kind = kinds.at(table_kind);
    table.source = sources.at(table_source);
    table.format = table_formats.at(table_format);
    if (*table_t_opt) table.t = table_t;
    return run_table(table, out, err);
  }
  if (verify_cmd->parsed()) {
    verify.format = report_formats.at(verify_format);
    if (selector != "all") verify.check = parse_check_name(selector);
    return run_verify(verify, out, err);
  }
  coeff.gf = gfs.at(coeff_gf);
  if (*coeff_t_opt) coeff.t = coeff_t;
  if (*m_opt) coeff.M = coeff_m;
  if (*n_opt) coeff.N = coeff_n_box;
  return run_coeff(coeff, out, err);
}

}  // namespace overpart::cli
