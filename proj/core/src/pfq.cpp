#include "hypersum/pfq.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "hypersum/errors.hpp"

namespace hypersum {

Rational term_ratio(const SeriesSpec& spec, std::uint64_t k) {
  mpq_class r = spec.argument().get();
  const mpq_class kk(static_cast<unsigned long>(k));
  for (const auto& a : spec.numerator()) r *= a.get() + kk;
  for (const auto& b : spec.denominator()) {
    const mpq_class f = b.get() + kk;
    if (sgn(f) == 0) throw DomainError("term ratio hits a vanishing denominator in " + spec.str());
    r /= f;
  }
  r /= kk + 1;
  return Rational(std::move(r));
}

Rational pfq_terminating_sum(const SeriesSpec& spec) {
  const auto last = spec.last_term_index();
  if (!last) throw DomainError(spec.str() + " does not terminate");
  Rational term(1);
  Rational sum(1);
  for (std::uint64_t k = 0; k < *last; ++k) {
    term *= term_ratio(spec, k);
    sum += term;
  }
  return sum;
}

std::vector<BigFloat> pfq_partial_sums(const SeriesSpec& spec, std::size_t count, Bits wp) {
  std::vector<BigFloat> sums;
  sums.reserve(count);
  BigFloat term(1, wp);
  BigFloat sum(1, wp);
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) {
      term *= term_ratio(spec, k - 1);
      sum += term;
    }
    sums.push_back(sum);
  }
  return sums;
}

namespace {

// Ratios |t_{j+1}/t_j| are monotone once every shifted parameter is positive.
std::uint64_t monotone_from(const SeriesSpec& spec) {
  Rational largest(0);
  for (const auto& a : spec.numerator()) largest = std::max(largest, abs(a));
  for (const auto& b : spec.denominator()) largest = std::max(largest, abs(b));
  const BigInt ceil_value = (largest.numerator() + largest.denominator() - 1) / largest.denominator();
  return static_cast<std::uint64_t>(ceil_value.get_ui()) + 2;
}

NumericValue sum_geometric(const SeriesSpec& spec, Bits precision, std::uint64_t max_terms) {
  const Bits wp = precision + kGuardBits;
  const std::uint64_t k0 = monotone_from(spec);
  const Rational limit = spec.p() == spec.q() + 1 ? abs(spec.argument()) : Rational(0);
  const BigFloat eps = BigFloat::exp2(-static_cast<long>(wp), 64);

  BigFloat term(1, wp);
  BigFloat sum(1, wp);
  BigFloat largest_sum = abs(sum);
  for (std::uint64_t k = 0; k + 1 < max_terms; ++k) {
    const Rational ratio = term_ratio(spec, k);
    term *= ratio;
    sum += term;
    largest_sum = std::max(largest_sum, abs(sum));
    if (k + 1 < k0) continue;
    // Tail after t_{k+1}: |t_{k+2}| + ... <= |t_{k+1}| r / (1 - r)
    const Rational r = std::max(abs(term_ratio(spec, k + 1)), limit);
    if (r >= Rational(1)) continue;
    BigFloat tail = abs(term) * (r / (Rational(1) - r));
    const BigFloat scale = sum.is_zero() ? BigFloat(1, wp) : abs(sum);
    if (tail <= scale * eps || term.is_zero()) {
      const std::uint64_t used = k + 2;
      // accumulated rounding: one half-ulp per term update and addition
      BigFloat rounding = largest_sum * eps * Rational(static_cast<long>(2 * used));
      NumericValue out{sum.rounded(precision), (tail + rounding).rounded(precision), used,
                       EvalMethod::direct, std::nullopt};
      return out;
    }
  }
  throw BudgetExceededError(spec.str() + ": " + std::to_string(max_terms) +
                            " terms do not reach " + std::to_string(precision) + "-bit precision");
}

NumericValue sum_accelerated(const SeriesSpec& spec, Bits precision, const PfqOptions& opts) {
  const Bits wp = precision + kGuardBits;
  if (opts.accel == AccelMethod::wynn_epsilon) {
    // indices 2^j - 1 for j = 0..J with 2^J <= max_terms
    std::size_t count = 1;
    while (count * 2 <= opts.max_terms) count *= 2;
    std::vector<BigFloat> samples;
    if (count >= (std::size_t{1} << (kMinPartialSums - 1))) {
      const auto all = pfq_partial_sums(spec, count, wp);
      for (std::size_t idx = 1; idx <= count; idx *= 2) samples.push_back(all[idx - 1]);
    }
    if (samples.size() < kMinPartialSums) {
      throw BudgetExceededError(spec.str() + ": wynn_epsilon needs at least " +
                                std::to_string(std::size_t{1} << (kMinPartialSums - 1)) + " terms");
    }
    NumericValue v = wynn_epsilon(samples, precision);
    v.terms_used = count;
    return v;
  }
  if (opts.max_terms < kMinPartialSums) {
    throw BudgetExceededError(spec.str() + ": levin_u needs at least " +
                              std::to_string(kMinPartialSums) + " terms");
  }
  // Beyond this order the transform is dominated by cancellation at working precision.
  const std::uint64_t order_cap = static_cast<std::uint64_t>(wp) / 2 + 40;
  const std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(opts.max_terms, order_cap + 1));
  std::vector<BigFloat> sums;
  std::vector<BigFloat> terms;
  sums.reserve(count);
  terms.reserve(count);
  BigFloat term(1, wp);
  BigFloat sum(1, wp);
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) {
      term *= term_ratio(spec, k - 1);
      sum += term;
    }
    terms.push_back(term);
    sums.push_back(sum);
  }
  return levin_u(sums, terms, precision);
}

}  // namespace

NumericValue pfq_eval(const SeriesSpec& spec, Bits precision, const PfqOptions& opts) {
  switch (convergence_class(spec)) {
    case ConvergenceClass::divergent:
      throw DivergentError(spec.str() + " is divergent (omega = " + spec.omega().str() + ")");
    case ConvergenceClass::terminating: {
      const std::uint64_t used = *spec.last_term_index() + 1;
      if (used > opts.max_terms) {
        throw BudgetExceededError(spec.str() + ": terminating sum needs " + std::to_string(used) + " terms");
      }
      return NumericValue{BigFloat(pfq_terminating_sum(spec), precision), BigFloat(precision), used,
                          EvalMethod::terminating, std::nullopt};
    }
    case ConvergenceClass::geometric:
      return sum_geometric(spec, precision, opts.max_terms);
    case ConvergenceClass::unity_convergent:
      return sum_accelerated(spec, precision, opts);
  }
  throw DomainError("unreachable convergence class");
}

BigFloat ev_to_numeric(const ExactValue& x, Bits precision) {
  const Bits wp = precision + kGuardBits;
  const BigFloat sqrt_pi = sqrt(BigFloat::pi(wp));
  const BigFloat root2 = BigFloat::sqrt2(wp);
  BigFloat total(wp);
  for (const auto& [m, c] : x.terms()) {
    BigFloat v = pow(sqrt_pi, m.sqrtpi_pow) * c;
    if (m.sqrt2 == 1) v *= root2;
    total += v;
  }
  return total.rounded(precision);
}

}  // namespace hypersum
