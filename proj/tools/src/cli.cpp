#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hypersum/catalog.hpp"
#include "hypersum/closed_forms.hpp"
#include "hypersum/errors.hpp"
#include "hypersum/families.hpp"
#include "hypersum/pfq.hpp"
#include "hypersum/recognition.hpp"
#include "hypersum/verify.hpp"

namespace hypersum::cli {
namespace {

using nlohmann::json;

constexpr Bits kDefaultPrecision = 384;
constexpr long kDefaultRecognitionBound = 1L << 20;

struct Globals {
  Bits precision = kDefaultPrecision;
  std::uint64_t max_terms = 5000;
  double tolerance = 1e-15;
  std::string accel = "levin";
  std::string output = "text";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string one_line(std::string s) {
  std::replace_if(s.begin(), s.end(), [](char c) { return c == '\n' || c == '\r'; }, ' ');
  return s;
}

int full_digits(Bits precision) { return static_cast<int>(digits_for_bits(precision)) + 1; }


json opt_json(const std::optional<Rational>& q) { return q ? json(q->str()) : json(nullptr); }

Rational parse_rational(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::vector<Rational> parse_list(const std::string& flag, const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& s : items) {
    if (!s.empty()) out.push_back(parse_rational(flag, s));
  }
  return out;
}

AccelMethod accel_of(const Globals& g) {
  auto m = parse_accel_method(g.accel);
  if (!m) throw UsageError("--accel: unknown method '" + g.accel + "'");
  return *m;
}

// significant digits in a plain decimal literal
long significant_digits(const std::string& text) {
  long count = 0;
  bool leading = true;
  for (char c : text) {
    if (c == 'e' || c == 'E') break;
    if (!std::isdigit(static_cast<unsigned char>(c))) continue;
    if (leading && c == '0') continue;
    leading = false;
    ++count;
  }
  return count;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(std::span<const std::string> args);

 private:
  bool json_output() const { return g_.output == "json"; }
  void emit(const json& j) { out_ << j.dump(2) << "\n"; }
  int fail(int code, std::string_view kind, const std::string& message);

  int cmd_eval();
  int cmd_closed();
  int cmd_identity();
  int cmd_verify();
  int cmd_catalog();
  int cmd_recognize();

  std::ostream& out_;
  std::ostream& err_;
  Globals g_;

  std::vector<std::string> eval_num_, eval_den_;
  std::string eval_z_;

  std::string closed_theorem_, closed_a_, closed_b_ = "0", closed_c_ = "0", closed_d_;
  bool closed_numeric_ = false;

  std::string family_;
  std::uint32_t fam_m_ = 0, fam_n_ = 0, fam_s_ = 0;
  std::string fam_d_;

  bool verify_all_ = false;
  bool verify_parallel_ = false;
  std::string verify_id_;

  std::string catalog_format_ = "json";

  std::string recog_value_;
  long recog_bound_ = kDefaultRecognitionBound;
};

int Runner::fail(int code, std::string_view kind, const std::string& message) {
  const std::string msg = one_line(message);
  err_ << "error: " << kind << ": " << msg << "\n";
  if (json_output()) emit(json{{"error", {{"kind", kind}, {"message", msg}, {"exit_code", code}}}});
  return code;
}

int Runner::run(std::span<const std::string> args) {
  CLI::App app{"Exact and numeric evaluation of hypergeometric summation identities", "hypersum"};
  app.require_subcommand(1);
  app.add_option("--precision", g_.precision, "working precision in bits")
      ->envname("HYPERSUM_PRECISION")
      ->check(CLI::Range(Bits{16}, Bits{1} << 20));
  app.add_option("--max-terms", g_.max_terms, "term budget per series")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));
  app.add_option("--tolerance", g_.tolerance, "relative tolerance for verify")->check(CLI::PositiveNumber);
  app.add_option("--accel", g_.accel, "series acceleration")
      ->check(CLI::IsMember({"levin", "levin_u", "wynn", "wynn_epsilon"}));
  app.add_option("--output", g_.output, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* eval = app.add_subcommand("eval", "numeric value of a pFq series");
  eval->fallthrough();
  eval->add_option("--num", eval_num_, "numerator parameters")->delimiter(',')->required();
  eval->add_option("--den", eval_den_, "denominator parameters")->delimiter(',');
  eval->add_option("--z", eval_z_, "argument")->required();

  auto* closed = app.add_subcommand("closed", "closed form of a summation theorem");
  closed->fallthrough();
  closed->add_option("--theorem", closed_theorem_, "theorem name")->required();
  closed->add_option("--a", closed_a_)->required();
  closed->add_option("--b", closed_b_);
  closed->add_option("--c", closed_c_);
  closed->add_option("--d", closed_d_);
  closed->add_flag("--numeric", closed_numeric_, "evaluate the gamma quotient numerically");

  auto* identity = app.add_subcommand("identity", "instantiate an identity family");
  identity->fallthrough();
  identity->add_option("--family", family_, "T2.1 .. T2.5")->required();
  identity->add_option("--m", fam_m_)->check(CLI::Range(0u, kDefaultFamilyCap));
  identity->add_option("--n", fam_n_)->check(CLI::Range(0u, kDefaultFamilyCap));
  identity->add_option("--s", fam_s_)->check(CLI::Range(0u, kDefaultFamilyCap));
  identity->add_option("--d", fam_d_);

  auto* verify_cmd = app.add_subcommand("verify", "verify catalog entries numerically");
  verify_cmd->fallthrough();
  auto* all_flag = verify_cmd->add_flag("--all", verify_all_, "every catalog entry");
  auto* id_opt = verify_cmd->add_option("--id", verify_id_, "a single catalog id");
  all_flag->excludes(id_opt);
  verify_cmd->add_flag("--parallel", verify_parallel_, "use a worker pool");

  auto* catalog_cmd = app.add_subcommand("catalog", "list the identity catalog");
  catalog_cmd->fallthrough();
  catalog_cmd->add_option("--format", catalog_format_)->check(CLI::IsMember({"json", "text"}));

  auto* recog = app.add_subcommand("recognize", "find an exact form for a decimal");
  recog->fallthrough();
  recog->add_option("--value", recog_value_, "decimal value")->required();
  recog->add_option("--bound", recog_bound_, "coefficient bound")->check(CLI::Range(1L, 1L << 40));

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out_ << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    return fail(kUsageError, "usage", e.what());
  }
  if (verify_cmd->parsed() && !verify_all_ && verify_id_.empty()) {
    return fail(kUsageError, "usage", "verify needs --all or --id");
  }

  try {
    if (eval->parsed()) return cmd_eval();
    if (closed->parsed()) return cmd_closed();
    if (identity->parsed()) return cmd_identity();
    if (verify_cmd->parsed()) return cmd_verify();
    if (catalog_cmd->parsed()) return cmd_catalog();
    if (recog->parsed()) return cmd_recognize();
  } catch (const UsageError& e) {
    return fail(kUsageError, "usage", e.what());
  } catch (const ParseError& e) {
    return fail(kUsageError, to_string(e.kind()), e.what());
  } catch (const Error& e) {
    return fail(kDomainError, to_string(e.kind()), e.what());
  }
  return fail(kUsageError, "usage", "no subcommand");
}

int Runner::cmd_eval() {
  SeriesSpec spec(parse_list("--num", eval_num_), parse_list("--den", eval_den_),
                  parse_rational("--z", eval_z_));
  const auto cls = convergence_class(spec);
  NumericValue v = pfq_eval(spec, g_.precision, PfqOptions{g_.max_terms, accel_of(g_)});
  std::optional<Rational> exact;
  if (cls == ConvergenceClass::terminating) exact = pfq_terminating_sum(spec);

  if (json_output()) {
    emit(json{
        {"series", spec.str()},
        {"convergence", to_string(cls)},
        {"precision_bits", g_.precision},
        {"value", v.estimate.to_string(full_digits(g_.precision))},
        {"error_bound", v.error_bound.to_string(6)},
        {"terms_used", v.terms_used},
        {"method", to_string(v.method)},
        {"accelerator", v.accelerator ? json(to_string(*v.accelerator)) : json(nullptr)},
        {"exact", exact ? json(exact->str()) : json(nullptr)},
    });
    return kSuccess;
  }
  out_ << "series   " << spec.str() << "\n"
       << "class    " << to_string(cls) << "\n"
       << "value    " << v.estimate.to_string(kTextDigits) << "\n"
       << "error    " << v.error_bound.to_string(6) << "\n"
       << "terms    " << v.terms_used << "\n"
       << "method   " << to_string(v.method);
  if (v.accelerator) out_ << " (" << to_string(*v.accelerator) << ")";
  out_ << "\n";
  if (exact) out_ << "exact    " << exact->str() << "\n";
  return kSuccess;
}

int Runner::cmd_closed() {
  auto t = parse_theorem(closed_theorem_);
  if (!t) throw UsageError("--theorem: unknown theorem '" + closed_theorem_ + "'");
  TheoremParams p{parse_rational("--a", closed_a_), parse_rational("--b", closed_b_),
                  parse_rational("--c", closed_c_), std::nullopt};
  if (!closed_d_.empty()) p.d = parse_rational("--d", closed_d_);
  if (takes_d(*t) && !p.d) throw UsageError("--d is required for " + closed_theorem_);
  if (!takes_d(*t) && p.d) throw UsageError("--d is not a parameter of " + closed_theorem_);

  const SeriesSpec series = theorem_series(*t, p);
  std::optional<ExactValue> exact;
  BigFloat value(g_.precision);
  if (closed_numeric_) {
    value = numeric::evaluate(*t, p, g_.precision);
  } else {
    exact = evaluate(*t, p);
    value = ev_to_numeric(*exact, g_.precision);
  }

  if (json_output()) {
    emit(json{
        {"theorem", to_string(*t)},
        {"params", {{"a", p.a.str()}, {"b", p.b.str()}, {"c", p.c.str()}, {"d", opt_json(p.d)}}},
        {"series", series.str()},
        {"exact", exact ? json(exact->str()) : json(nullptr)},
        {"exact_terms", exact ? to_json(*exact) : json(nullptr)},
        {"precision_bits", g_.precision},
        {"value", value.to_string(full_digits(g_.precision))},
    });
    return kSuccess;
  }
  if (exact) out_ << exact->str() << "\n";
  out_ << value.to_string(kTextDigits) << "\n";
  return kSuccess;
}

int Runner::cmd_identity() {
  auto f = parse_family(family_);
  if (!f || *f == Family::catalog) throw UsageError("--family: unknown family '" + family_ + "'");
  FamilyParams p{fam_m_, fam_n_, fam_s_, std::nullopt};
  if (!fam_d_.empty()) p.d = parse_rational("--d", fam_d_);
  const Identity id = generate(*f, p);
  const BigFloat value = ev_to_numeric(id.rhs, g_.precision);

  if (json_output()) {
    emit(json{
        {"family", to_string(*f)},
        {"params", {{"m", p.m}, {"n", p.n}, {"s", p.s}, {"d", opt_json(p.d)}}},
        {"id", catalog_id(*f, p)},
        {"lhs", id.lhs.str()},
        {"rhs", id.rhs.str()},
        {"rhs_terms", to_json(id.rhs)},
        {"precision_bits", g_.precision},
        {"value", value.to_string(full_digits(g_.precision))},
    });
    return kSuccess;
  }
  out_ << "id     " << catalog_id(*f, p) << "\n"
       << "lhs    " << id.lhs.str() << "\n"
       << "rhs    " << id.rhs.str() << "\n"
       << "value  " << value.to_string(kTextDigits) << "\n";
  return kSuccess;
}

int Runner::cmd_verify() {
  VerifyOptions opts{g_.precision, g_.tolerance, accel_of(g_), g_.max_terms};
  VerifyRun run;
  if (verify_all_) {
    run = verify_all(opts, verify_parallel_);
  } else {
    const CatalogEntry* entry = find_catalog_entry(verify_id_);
    if (!entry) throw UsageError("--id: no catalog entry '" + verify_id_ + "'");
    run.reports.push_back(verify(*entry, opts));
    run.summary = {1, run.reports[0].pass ? 1u : 0u, run.reports[0].pass ? 0u : 1u, opts.precision,
                   opts.tolerance};
  }
  if (json_output()) {
    emit(to_json(run));
  } else {
    out_ << render_text(run);
  }
  return run.summary.failed == 0 ? kSuccess : kVerificationFailed;
}

int Runner::cmd_catalog() {
  if (catalog_format_ == "text") {
    for (const auto& e : catalog()) {
      out_ << e.id << "  " << e.identity.lhs.str() << " = " << e.expected.str() << "\n";
    }
    return kSuccess;
  }
  json entries = json::array();
  for (const auto& e : catalog()) {
    const auto& p = e.identity.params;
    entries.push_back({
        {"id", e.id},
        {"family", to_string(e.identity.family)},
        {"params", {{"m", p.m}, {"n", p.n}, {"s", p.s}, {"d", opt_json(p.d)}}},
        {"lhs", e.identity.lhs.str()},
        {"typeset", e.typeset.str()},
        {"expected", e.expected.str()},
        {"expected_terms", to_json(e.expected)},
        {"flags", flag_names(e.flags)},
    });
  }
  emit(json{{"count", entries.size()}, {"entries", std::move(entries)}});
  return kSuccess;
}

int Runner::cmd_recognize() {
  const long digits = significant_digits(recog_value_);
  const Bits available = digits > 0 ? bits_for_digits(digits) : 0;
  const Bits precision = std::min(g_.precision, available);
  BigFloat x(64);
  try {
    x = BigFloat::parse(recog_value_, std::max<Bits>(precision, 64));
  } catch (const ParseError& e) {
    throw UsageError(std::string("--value: ") + e.what());
  }

  Recognition r;
  if (precision >= 128) {
    r = recognize_over(x, default_recognition_basis(), precision, BigInt(recog_bound_));
  }
  const bool found = r.value && r.confidence == Confidence::confirmed;

  if (json_output()) {
    json coeffs = json::array();
    for (const auto& c : r.relation.coefficients) coeffs.push_back(c.get_str());
    emit(json{
        {"value", recog_value_},
        {"precision_bits", precision},
        {"bound", recog_bound_},
        {"result", found ? json(r.value->str()) : json(nullptr)},
        {"result_terms", found ? to_json(*r.value) : json(nullptr)},
        {"confidence", to_string(found ? r.confidence : Confidence::none)},
        {"coefficients", std::move(coeffs)},
    });
    return kSuccess;
  }
  out_ << (found ? r.value->str() : std::string("none")) << "\n";
  return kSuccess;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  return runner.run(args);
}

}  // namespace hypersum::cli
