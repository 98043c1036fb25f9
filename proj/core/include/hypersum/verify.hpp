#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hypersum/acceleration.hpp"
#include "hypersum/bigfloat.hpp"
#include "hypersum/catalog.hpp"

namespace hypersum {

struct VerifyOptions {
  Bits precision = 384;
  double tolerance = 1e-15;
  AccelMethod accel = AccelMethod::levin_u;
  std::uint64_t max_terms = 5000;
};

/// Numeric evidence that a printed-but-suspect left-hand side does not sum to the result.
struct TypesetCheck {
  std::string series;
  std::optional<BigFloat> value;
  std::optional<BigFloat> rel_error;
  bool matches = false;
  std::string reason;
};

struct VerifyReport {
  std::string id;
  std::string series;
  std::string exact_rendered;
  ExactValue exact;
  std::optional<BigFloat> numeric_lhs;
  std::optional<BigFloat> numeric_rhs;
  std::optional<BigFloat> abs_error;
  std::optional<BigFloat> rel_error;
  std::uint64_t terms_used = 0;
  std::optional<EvalMethod> method;
  std::optional<AccelMethod> accelerator;
  bool pass = false;
  std::string reason;  // empty when pass
  std::vector<std::string> flags;
  std::optional<TypesetCheck> typeset_check;
};

struct VerifySummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  Bits precision_bits = 0;
  double tolerance = 0;
};

struct VerifyRun {
  VerifySummary summary;
  std::vector<VerifyReport> reports;
};

/// Compares the accelerated numeric left-hand side with the exact expected value.
/// Series failures are recorded in the report's reason, never thrown. Pass means
/// rel_error <= tolerance (abs_error when the expected value is zero).
///
/// Throws DomainError when precision < 64 or tolerance <= 0.
VerifyReport verify(const CatalogEntry& entry, const VerifyOptions& opts);

/// Verifies every catalog entry. Reports keep catalog order whether or not the work
/// is spread across threads, so the output is identical either way.
VerifyRun verify_all(const VerifyOptions& opts, bool parallel);

nlohmann::json to_json(const VerifyReport& report, Bits precision);
/// {summary: {total, passed, failed, precision_bits, tolerance}, reports: [...]}
nlohmann::json to_json(const VerifyRun& run);
std::string render_text(const VerifyRun& run);

/// Significant digits used for numbers in text reports.
inline constexpr int kTextDigits = 30;

}  // namespace hypersum
