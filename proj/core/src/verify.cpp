#include "hypersum/verify.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "hypersum/errors.hpp"
#include "hypersum/pfq.hpp"

namespace hypersum {

namespace {

void check_options(const VerifyOptions& opts) {
  if (opts.precision < 64) throw DomainError("verification precision must be at least 64 bits");
  if (!(opts.tolerance > 0)) throw DomainError("verification tolerance must be positive");
}

std::string error_reason(const Error& e) { return std::string(to_string(e.kind())) + ": " + e.what(); }

BigFloat relative(const BigFloat& abs_error, const BigFloat& reference) {
  if (reference.is_zero()) return abs_error;
  return abs_error / abs(reference);
}

TypesetCheck check_typeset(const CatalogEntry& entry, const BigFloat& rhs, const VerifyOptions& opts,
                           const BigFloat& tolerance) {
  TypesetCheck check;
  check.series = entry.typeset.str();
  try {
    NumericValue v = pfq_eval(entry.typeset, opts.precision, PfqOptions{opts.max_terms, opts.accel});
    BigFloat rel = relative(abs(v.estimate - rhs), rhs);
    check.matches = rel <= tolerance;
    check.value = std::move(v.estimate);
    check.rel_error = std::move(rel);
  } catch (const Error& e) {
    check.reason = error_reason(e);
  }
  return check;
}

}  // namespace

VerifyReport verify(const CatalogEntry& entry, const VerifyOptions& opts) {
  check_options(opts);
  VerifyReport report;
  report.id = entry.id;
  report.series = entry.identity.lhs.str();
  report.exact_rendered = entry.expected.str();
  report.exact = entry.expected;
  report.flags = flag_names(entry.flags);

  const BigFloat tolerance(Rational(mpq_class(opts.tolerance)), 64);
  const BigFloat rhs = ev_to_numeric(entry.expected, opts.precision);
  report.numeric_rhs = rhs;
  try {
    NumericValue lhs = pfq_eval(entry.identity.lhs, opts.precision, PfqOptions{opts.max_terms, opts.accel});
    report.terms_used = lhs.terms_used;
    report.method = lhs.method;
    report.accelerator = lhs.accelerator;
    BigFloat abs_error = abs(lhs.estimate - rhs);
    BigFloat rel_error = relative(abs_error, rhs);
    report.pass = rel_error <= tolerance;
    if (!report.pass) {
      std::ostringstream why;
      why << "insufficient_precision: relative error " << rel_error.to_string(6) << " exceeds tolerance "
          << opts.tolerance;
      report.reason = why.str();
    }
    report.numeric_lhs = std::move(lhs.estimate);
    report.abs_error = std::move(abs_error);
    report.rel_error = std::move(rel_error);
  } catch (const Error& e) {
    report.pass = false;
    report.reason = error_reason(e);
  }
  if (has_flag(entry.flags, CatalogFlag::suspected_typo)) {
    report.typeset_check = check_typeset(entry, rhs, opts, tolerance);
  }
  return report;
}

VerifyRun verify_all(const VerifyOptions& opts, bool parallel) {
  check_options(opts);
  const auto& entries = catalog();
  VerifyRun run;
  run.reports.resize(entries.size());
  if (parallel) {
    const unsigned hw = std::max(2u, std::thread::hardware_concurrency());
    const unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(entries.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) {
          run.reports[i] = verify(entries[i], opts);
        }
        mpfr_free_cache();
      });
    }
  } else {
    for (std::size_t i = 0; i < entries.size(); ++i) run.reports[i] = verify(entries[i], opts);
  }
  run.summary.total = run.reports.size();
  run.summary.passed = static_cast<std::size_t>(
      std::count_if(run.reports.begin(), run.reports.end(), [](const VerifyReport& r) { return r.pass; }));
  run.summary.failed = run.summary.total - run.summary.passed;
  run.summary.precision_bits = opts.precision;
  run.summary.tolerance = opts.tolerance;
  return run;
}

namespace {

int full_digits(Bits precision) { return static_cast<int>(digits_for_bits(precision)) + 1; }

nlohmann::json number_or_null(const std::optional<BigFloat>& v, int digits) {
  if (!v) return nullptr;
  return v->to_string(digits);
}

}  // namespace

nlohmann::json to_json(const VerifyReport& r, Bits precision) {
  const int digits = full_digits(precision);
  nlohmann::json j{
      {"id", r.id},
      {"series", r.series},
      {"exact_rendered", r.exact_rendered},
      {"exact_terms", to_json(r.exact)},
      {"numeric_lhs", number_or_null(r.numeric_lhs, digits)},
      {"numeric_rhs", number_or_null(r.numeric_rhs, digits)},
      {"abs_error", number_or_null(r.abs_error, 6)},
      {"rel_error", number_or_null(r.rel_error, 6)},
      {"terms_used", r.terms_used},
      {"method", r.method ? nlohmann::json(std::string(to_string(*r.method))) : nlohmann::json(nullptr)},
      {"accelerator",
       r.accelerator ? nlohmann::json(std::string(to_string(*r.accelerator))) : nlohmann::json(nullptr)},
      {"pass", r.pass},
      {"reason", r.reason},
      {"flags", r.flags},
  };
  if (r.typeset_check) {
    const auto& t = *r.typeset_check;
    j["typeset_check"] = {
        {"series", t.series},
        {"value", number_or_null(t.value, digits)},
        {"rel_error", number_or_null(t.rel_error, 6)},
        {"matches", t.matches},
        {"reason", t.reason},
    };
  }
  return j;
}

nlohmann::json to_json(const VerifyRun& run) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : run.reports) reports.push_back(to_json(r, run.summary.precision_bits));
  return {
      {"summary",
       {{"total", run.summary.total},
        {"passed", run.summary.passed},
        {"failed", run.summary.failed},
        {"precision_bits", run.summary.precision_bits},
        {"tolerance", run.summary.tolerance}}},
      {"reports", std::move(reports)},
  };
}

std::string render_text(const VerifyRun& run) {
  std::ostringstream os;
  for (const auto& r : run.reports) {
    os << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(22) << r.id << std::setw(28)
       << r.exact_rendered;
    if (r.numeric_lhs) {
      os << " lhs=" << r.numeric_lhs->to_string(kTextDigits) << " rel_err=" << r.rel_error->to_string(3);
    }
    os << " terms=" << r.terms_used;
    if (!r.reason.empty()) os << " reason=\"" << r.reason << "\"";
    if (!r.flags.empty()) {
      os << " flags=";
      for (std::size_t i = 0; i < r.flags.size(); ++i) os << (i ? "," : "") << r.flags[i];
    }
    if (r.typeset_check) {
      const auto& t = *r.typeset_check;
      os << "\n     printed " << t.series << (t.matches ? " matches" : " does not match");
      if (t.rel_error) os << " (rel_err=" << t.rel_error->to_string(3) << ")";
    }
    os << "\n";
  }
  os << "total=" << run.summary.total << " passed=" << run.summary.passed << " failed=" << run.summary.failed
     << " precision_bits=" << run.summary.precision_bits << " tolerance=" << run.summary.tolerance << "\n";
  return os.str();
}

}  // namespace hypersum
