// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypersum/catalog.hpp"
#include "hypersum/closed_forms.hpp"
#include "hypersum/errors.hpp"
#include "hypersum/exact_gamma.hpp"
#include "hypersum/numeric_gamma.hpp"
#include "hypersum/pfq.hpp"
#include "hypersum/recognition.hpp"
#include "hypersum/verify.hpp"

using namespace hypersum;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Rational q(long n, long d = 1) { return Rational(n, d); }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

BigFloat rel_error(const BigFloat& got, const BigFloat& want) { return abs(got - want) / abs(want); }

Outcome catalog_exactness() {
  const auto t0 = Clock::now();
  std::size_t matched = 0;
  std::string first_bad;
  for (const auto& e : catalog()) {
    const ExactValue rhs = generate(e.identity.family, e.identity.params).rhs;
    if (rhs == e.expected) {
      ++matched;
    } else if (first_bad.empty()) {
      first_bad = e.id;
    }
  }
  const bool spot = find_catalog_entry("2.1/m=4")->expected == ExactValue::pi(q(315, 65536)) &&
                    find_catalog_entry("2.4/m=3/d=9/2")->expected == ExactValue::monomial(q(35, 512), 1, 2) &&
                    find_catalog_entry("2.5/m=2/d=7")->expected ==
                        ExactValue::monomial(q(225, 256), 0, 4) - ExactValue(q(5, 7));
  const double dt = seconds_since(t0);
  std::ostringstream os;
  os << matched << "/" << catalog().size() << " exact, spot values " << (spot ? "ok" : "wrong") << ", " << dt << " s";
  if (!first_bad.empty()) os << ", first mismatch " << first_bad;
  return {matched == catalog().size() && spot && dt < 1.0, os.str()};
}

Outcome numeric_verification() {
  const auto t0 = Clock::now();
  const VerifyRun run = verify_all({384, 1e-15, AccelMethod::levin_u, 5000}, false);
  const double dt = seconds_since(t0);
  bool terms_ok = true;
  for (const auto& r : run.reports) terms_ok = terms_ok && r.terms_used <= 5000;

  // geometric entries with a 300-term budget
  std::size_t geometric = 0, geometric_ok = 0;
  const BigFloat limit = BigFloat::parse("1e-30", 128);
  for (const auto& e : catalog()) {
    if (convergence_class(e.identity.lhs) != ConvergenceClass::geometric) continue;
    ++geometric;
    try {
      const NumericValue v = pfq_eval(e.identity.lhs, 128, {300, AccelMethod::levin_u});
      const BigFloat want = ev_to_numeric(e.expected, 256);
      if (v.terms_used <= 300 && rel_error(v.estimate, want) <= limit) ++geometric_ok;
    } catch (const Error&) {
    }
  }
  std::ostringstream os;
  os << run.summary.passed << "/" << run.summary.total << " pass at 384 bits in " << dt << " s; " << geometric_ok
     << "/" << geometric << " z=1/2 entries reach 1e-30 within 300 terms";
  return {run.summary.failed == 0 && terms_ok && dt < 60.0 && geometric > 0 && geometric_ok == geometric, os.str()};
}

Outcome reduction_suite() {
  std::mt19937_64 rng(31337);
  auto half = [&](long lo, long hi) { return q(std::uniform_int_distribution<long>(2 * lo, 2 * hi)(rng), 2); };
  auto integer = [&](long lo, long hi) { return q(std::uniform_int_distribution<long>(lo, hi)(rng)); };
  constexpr int kTuples = 200;

  struct Case {
    const char* name;
    std::function<std::pair<ExactValue, ExactValue>()> draw;
  };
  const std::vector<Case> cases = {
      {"gauss d=c",
       [&] {
         const Rational a = half(-10, 10), b = half(-10, 10), c = half(1, 15);
         return std::pair{gauss_ext(a, b, c, c), gauss(a, b, c)};
       }},
      {"gauss_second d=(a+b+1)/2",
       [&] {
         const Rational a = integer(-12, 12), b = integer(-12, 12);
         return std::pair{gauss_second_ext(a, b, (a + b + q(1)) / q(2)), gauss_second(a, b)};
       }},
      {"bailey d=c",
       [&] {
         const Rational a = half(-10, 10), c = a + integer(-10, 10);
         return std::pair{bailey_ext(a, c, c), bailey(a, c)};
       }},
      {"watson d=2c",
       [&] {
         const Rational a = integer(-10, 10), b = integer(-10, 10), c = half(1, 12);
         return std::pair{watson_ext(a, b, c, q(2) * c), watson(a, b, c)};
       }},
  };
  std::ostringstream os;
  bool ok = true;
  for (const auto& c : cases) {
    int done = 0, equal = 0;
    for (int tries = 0; done < kTuples && tries < 50 * kTuples; ++tries) {
      try {
        const auto [ext, base] = c.draw();
        ++done;
        if (ext == base) ++equal;
      } catch (const DomainError&) {
      } catch (const PoleError&) {
      }
    }
    ok = ok && done == kTuples && equal == kTuples;
    if (os.tellp() > 0) os << "; ";
    os << c.name << " " << equal << "/" << done;
  }
  return {ok, os.str()};
}

Outcome gamma_cross_check() {
  const Bits p = 256;
  const BigFloat limit = BigFloat::exp2(-248, 64);
  int checked = 0, agreed = 0;
  BigFloat worst(64);
  for (long t = -19; t <= 41; ++t) {
    const Rational x = q(t, 2);
    if (x.is_nonpositive_integer()) continue;
    ++checked;
    const BigFloat got = num_gamma(BigFloat(x, p), p);
    const BigFloat err = rel_error(got, ev_to_numeric(exact_gamma(x), p + 64));
    worst = std::max(worst, err);
    if (err <= limit) ++agreed;
  }
  std::ostringstream os;
  os << agreed << "/" << checked << " half-integers within 2^-248, worst " << worst.to_string(3);
  return {agreed == checked && checked == 51, os.str()};
}

mpq_class brute_force_sum(const std::vector<Rational>& num, const std::vector<Rational>& den, const Rational& z,
                          long last) {
  mpq_class total = 0;
  for (long k = 0; k <= last; ++k) {
    mpq_class t = 1;
    for (const auto& a : num) {
      for (long i = 0; i < k; ++i) t *= a.get() + i;
    }
    for (const auto& b : den) {
      for (long i = 0; i < k; ++i) t /= b.get() + i;
    }
    for (long i = 1; i <= k; ++i) t *= z.get() / i;
    total += t;
  }
  return total;
}

Outcome terminating_oracle() {
  const SeriesSpec example({q(-3), q(2)}, {q(4)}, q(1));
  const bool example_ok = pfq_terminating_sum(example) == q(1, 5) && gauss(q(-3), q(2), q(4)) == ExactValue(q(1, 5)) &&
                          pfq_eval(example, 128).estimate == BigFloat(q(1, 5), 128);

  std::mt19937_64 rng(2718281828);
  std::uniform_int_distribution<long> nterm(0, 15), num(-40, 40), den(1, 9);
  std::uniform_int_distribution<int> extra(0, 3);
  int matched = 0;
  for (int i = 0; i < 50; ++i) {
    const long n = nterm(rng);
    std::vector<Rational> a{q(-n)}, b;
    for (int j = extra(rng); j > 0; --j) a.push_back(q(num(rng), den(rng)));
    for (int j = extra(rng); j > 0; --j) {
      Rational v = q(num(rng), den(rng));
      if (v.is_nonpositive_integer()) v = v + q(1, 3);
      b.push_back(v);
    }
    const Rational z = q(num(rng), den(rng));
    const SeriesSpec s(a, b, z);
    if (pfq_terminating_sum(s).get() == brute_force_sum(a, b, z, n)) ++matched;
  }
  std::ostringstream os;
  os << "2F1(-3,2;4;1) = 1/5 " << (example_ok ? "ok" : "wrong") << ", " << matched << "/50 random instances exact";
  return {example_ok && matched == 50, os.str()};
}

Outcome bailey_discrepancy() {
  const Bits p = 256;
  const ExactValue corrected = bailey(q(1, 2), q(3, 2));
  const bool exact_ok = corrected == ExactValue::monomial(q(1, 4), 1, 2);
  const NumericValue series =
      pfq_eval(theorem_series(Theorem::bailey, {q(1, 2), q(0), q(3, 2), std::nullopt}), p);
  const BigFloat series_err = rel_error(series.estimate, ev_to_numeric(corrected, p));
  const BigFloat typeset = numeric::bailey_typeset(q(1, 2), q(3, 2), p);
  // sqrt(pi) Gamma(5/4) from an external high-precision evaluation
  const BigFloat reference =
      BigFloat::parse("1.60655656092727898061362996713612570392332181551835528841088", p);
  const bool typeset_ok = rel_error(typeset, reference) < BigFloat::exp2(-180, 64);
  const BigFloat gap = abs(typeset - series.estimate);
  const bool ok = exact_ok && series_err <= BigFloat::parse("1e-15", 64) && typeset_ok && gap > BigFloat(q(2, 5), 64);
  std::ostringstream os;
  os << "corrected = " << corrected.str() << ", series rel_err " << series_err.to_string(3) << ", typeset form "
     << typeset.to_string(12) << " off by " << gap.to_string(4);
  return {ok, os.str()};
}

Outcome recognition_round_trip() {
  const Bits p = bits_for_digits(200);
  const BigInt bound(1 << 20);
  int recovered = 0;
  for (const auto& e : catalog()) {
    const std::string digits = ev_to_numeric(e.expected, p + 64).to_string(200);
    const auto got = recognize(BigFloat::parse(digits, p), p, bound);
    if (got && *got == e.expected) ++recovered;
  }
  const bool ln2_none = !recognize(BigFloat::ln2(p), p, bound).has_value();
  std::ostringstream os;
  os << recovered << "/" << catalog().size() << " recovered from 200 digits, ln 2 " << (ln2_none ? "none" : "MATCHED");
  return {recovered >= 38 && ln2_none, os.str()};
}

Outcome determinism() {
  const VerifyOptions opts{};
  std::string reference;
  int identical = 0, runs = 0;
  for (int i = 0; i < 5; ++i) {
    for (const bool parallel : {false, true}) {
      const VerifyRun run = verify_all(opts, parallel);
      const std::string out = to_json(run).dump() + render_text(run);
      if (runs == 0) reference = out;
      if (out == reference) ++identical;
      ++runs;
    }
  }
  std::ostringstream os;
  os << identical << "/" << runs << " runs byte-identical (5 sequential, 5 parallel)";
  return {identical == runs, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
      {"catalog exactness", catalog_exactness},
      {"numeric verification", numeric_verification},
      {"reduction identities", reduction_suite},
      {"gamma cross-check", gamma_cross_check},
      {"terminating oracle", terminating_oracle},
      {"bailey discrepancy", bailey_discrepancy},
      {"recognition round-trip", recognition_round_trip},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
