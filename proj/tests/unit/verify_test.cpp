#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "hypersum/catalog.hpp"
#include "hypersum/errors.hpp"
#include "hypersum/pfq.hpp"
#include "hypersum/series.hpp"
#include "hypersum/verify.hpp"
#include "support.hpp"

namespace hypersum {
namespace {

using test::dec;
using test::q;

TEST(Verify, GeometricEntry) {
  const VerifyReport r = verify(*find_catalog_entry("2.3/m=0/d=2"), {256, 1e-15});
  EXPECT_TRUE(r.pass) << r.reason;
  EXPECT_EQ(r.numeric_lhs->to_string(10), "1.500000000e+00");
  EXPECT_EQ(r.numeric_rhs->to_string(10), "1.500000000e+00");
  EXPECT_EQ(r.method, EvalMethod::direct);
}

TEST(Verify, UnityEntry) {
  const VerifyReport r = verify(*find_catalog_entry("2.5/m=0/d=1"), {384, 1e-15});
  EXPECT_TRUE(r.pass) << r.reason;
  const BigFloat want = dec("3.46740110027233965470862274996903778382842485181019765660334", 384);
  EXPECT_TRUE(test::agrees_to_bits(*r.numeric_lhs, want, 150));
  EXPECT_EQ(r.accelerator, AccelMethod::levin_u);
  EXPECT_LE(r.terms_used, 5000u);
}

TEST(Verify, PerturbedExpectationFails) {
  CatalogEntry bad = *find_catalog_entry("2.1/m=1");
  bad.expected = ExactValue::pi(q(3, 17));
  const VerifyReport r = verify(bad, {});
  EXPECT_FALSE(r.pass);
  EXPECT_NE(r.reason.find("insufficient_precision"), std::string::npos) << r.reason;
}

TEST(Verify, TypoEntryReportsPrintedSeries) {
  const VerifyReport r = verify(*find_catalog_entry("2.2/m=1/d=3"), {});
  EXPECT_TRUE(r.pass);
  ASSERT_TRUE(r.typeset_check.has_value());
  EXPECT_FALSE(r.typeset_check->matches);
  EXPECT_GT(*r.typeset_check->rel_error, BigFloat(q(1, 10), 64));
}

TEST(Verify, RejectsBadOptions) {
  EXPECT_THROW(verify(catalog()[0], {32, 1e-15}), DomainError);
  EXPECT_THROW(verify(catalog()[0], {128, 0.0}), DomainError);
}

TEST(VerifyAll, PassesAtDefaultSettings) {
  const VerifyRun run = verify_all({}, false);
  EXPECT_EQ(run.summary.total, catalog().size());
  EXPECT_EQ(run.summary.failed, 0u);
  for (const auto& r : run.reports) EXPECT_TRUE(r.pass) << r.id << ": " << r.reason;
}

TEST(VerifyAll, LevinAndWynnAgreeWithinTheirBounds) {
  constexpr Bits p = 256;
  std::size_t checked = 0;
  for (const auto& e : catalog()) {
    if (convergence_class(e.identity.lhs) != ConvergenceClass::unity_convergent) continue;
    const NumericValue lv = pfq_eval(e.identity.lhs, p, {5000, AccelMethod::levin_u});
    const NumericValue wy = pfq_eval(e.identity.lhs, p, {5000, AccelMethod::wynn_epsilon});
    EXPECT_LE(abs(lv.estimate - wy.estimate), lv.error_bound + wy.error_bound) << e.id;
    const BigFloat want = ev_to_numeric(e.expected, p);
    EXPECT_LE(abs(wy.estimate - want), wy.error_bound) << e.id;
    EXPECT_TRUE(test::agrees_to_bits(wy.estimate, want, 20)) << e.id;
    ++checked;
  }
  EXPECT_GE(checked, 20u);
}

TEST(VerifyAll, StarvedPrecisionFailsSomeEntries) {
  const VerifyRun run = verify_all({64, 1e-15}, false);
  EXPECT_GT(run.summary.failed, 0u);
  for (const auto& r : run.reports) {
    if (r.pass) continue;
    const bool known = r.reason.rfind("budget_exceeded", 0) == 0 || r.reason.rfind("insufficient_precision", 0) == 0;
    EXPECT_TRUE(known) << r.id << ": " << r.reason;
  }
}

TEST(VerifyAll, ParallelIsByteIdentical) {
  const VerifyOptions opts{};
  const std::string seq = to_json(verify_all(opts, false)).dump();
  const std::string par = to_json(verify_all(opts, true)).dump();
  EXPECT_EQ(seq, par);
  EXPECT_EQ(render_text(verify_all(opts, false)), render_text(verify_all(opts, true)));
}

TEST(VerifyAll, JsonShape) {
  const nlohmann::json j = to_json(verify_all({128, 1e-15}, true));
  EXPECT_EQ(j["summary"]["total"], 40);
  EXPECT_EQ(j["summary"]["precision_bits"], 128);
  const auto& first = j["reports"][0];
  for (const char* key : {"id", "series", "exact_rendered", "exact_terms", "numeric_lhs", "numeric_rhs",
                          "abs_error", "rel_error", "terms_used", "method", "accelerator", "pass", "reason", "flags"}) {
    EXPECT_TRUE(first.contains(key)) << key;
  }
}

}  // namespace
}  // namespace hypersum
