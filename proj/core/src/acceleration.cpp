#include "hypersum/acceleration.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "hypersum/errors.hpp"

namespace hypersum {

std::string_view to_string(AccelMethod m) noexcept {
  switch (m) {
    case AccelMethod::levin_u: return "levin_u";
    case AccelMethod::wynn_epsilon: return "wynn_epsilon";
  }
  return "unknown";
}

std::optional<AccelMethod> parse_accel_method(std::string_view name) {
  if (name == "levin" || name == "levin_u") return AccelMethod::levin_u;
  if (name == "wynn" || name == "wynn_epsilon") return AccelMethod::wynn_epsilon;
  return std::nullopt;
}

std::string_view to_string(EvalMethod m) noexcept {
  switch (m) {
    case EvalMethod::direct: return "direct";
    case EvalMethod::terminating: return "terminating";
    case EvalMethod::accelerated: return "accelerated";
  }
  return "unknown";
}

namespace {

void require_length(std::size_t n) {
  if (n < kMinPartialSums) {
    throw DomainError("acceleration needs at least " + std::to_string(kMinPartialSums) +
                      " partial sums, got " + std::to_string(n));
  }
}

// Rounding floor added to every heuristic bound: one unit at the requested precision.
BigFloat rounding_floor(const BigFloat& estimate, Bits precision) {
  BigFloat floor = BigFloat::exp2(-static_cast<long>(precision), 64);
  if (!estimate.is_zero()) floor = ldexp(floor, estimate.exponent());
  return floor;
}

// Orders past the best one tolerated before giving up on further improvement.
constexpr std::size_t kLevinPatience = 24;

}  // namespace

NumericValue levin_u(std::span<const BigFloat> partial_sums, std::span<const BigFloat> terms,
                     Bits precision) {
  require_length(partial_sums.size());
  if (terms.size() != partial_sums.size()) throw DomainError("levin_u: terms and sums differ in length");
  const Bits wp = precision + kGuardBits;

  // Remainder estimates omega_j = (j + 1) a_j; a zero term ends the usable prefix.
  std::vector<BigFloat> inv_omega;
  std::vector<BigFloat> sum_over_omega;
  for (std::size_t j = 0; j < partial_sums.size(); ++j) {
    if (terms[j].is_zero() || !terms[j].is_finite()) break;
    BigFloat u = BigFloat(1, wp) / (terms[j].rounded(wp) * Rational(static_cast<long>(j + 1)));
    sum_over_omega.push_back(partial_sums[j].rounded(wp) * u);
    inv_omega.push_back(std::move(u));
  }
  const std::size_t usable = inv_omega.size();
  if (usable < 3) throw NumericalBreakdownError("levin_u: vanishing terms leave fewer than three sums");

  std::vector<std::optional<BigFloat>> estimates(usable);
  std::optional<BigFloat> previous;
  std::optional<BigFloat> best;
  BigFloat best_diff(wp);
  std::size_t best_order = 0;
  std::size_t highest_order = 0;
  const BigFloat converged_scale = BigFloat::exp2(-static_cast<long>(wp), 64);

  BigInt binom;
  BigInt power;
  for (std::size_t k = 1; k < usable; ++k) {
    highest_order = k;
    BigFloat num(wp);
    BigFloat den(wp);
    for (std::size_t j = 0; j <= k; ++j) {
      // (-1)^j C(k, j) (j + 1)^(k - 1); the common (k + 1)^(k - 1) cancels in num/den.
      mpz_bin_uiui(binom.get_mpz_t(), k, j);
      mpz_ui_pow_ui(power.get_mpz_t(), j + 1, k - 1);
      BigInt w = binom * power;
      if (j % 2 == 1) w = -w;
      num += sum_over_omega[j] * w;
      den += inv_omega[j] * w;
    }
    if (den.is_zero() || !den.is_finite() || !num.is_finite()) {
      previous.reset();
      continue;
    }
    BigFloat estimate = num / den;
    estimates[k] = estimate;
    if (previous) {
      BigFloat diff = abs(estimate - *previous);
      if (!best || diff < best_diff) {
        best = estimate;
        best_diff = diff;
        best_order = k;
      }
      if (best_diff <= ldexp(converged_scale, estimate.is_zero() ? 0 : estimate.exponent())) break;
      if (k - best_order >= kLevinPatience) break;
    }
    previous = std::move(estimate);
  }
  if (!best) throw NumericalBreakdownError("levin_u: no two consecutive orders could be formed");

  NumericValue out{best->rounded(precision), BigFloat(precision), highest_order + 1,
                   EvalMethod::accelerated, AccelMethod::levin_u};
  // The smallest consecutive difference alone is optimistic; widen it to the
  // spread of the neighbouring orders.
  BigFloat spread = best_diff;
  for (std::size_t j = best_order > 2 ? best_order - 2 : 1; j <= best_order + 2 && j < usable; ++j) {
    if (estimates[j]) spread = std::max(spread, abs(*estimates[j] - *best));
  }
  out.error_bound = (spread + rounding_floor(*best, precision)).rounded(precision);
  return out;
}

NumericValue wynn_epsilon(std::span<const BigFloat> partial_sums, Bits precision) {
  require_length(partial_sums.size());
  const Bits wp = precision + kGuardBits;
  const std::size_t n = partial_sums.size();

  std::vector<BigFloat> before(n + 1, BigFloat(wp));  // epsilon_{-1} = 0
  std::vector<BigFloat> column;
  column.reserve(n);
  for (const auto& s : partial_sums) column.push_back(s.rounded(wp));

  // even columns: newest entry and its within-column step
  std::vector<BigFloat> estimates{column.back()};
  std::vector<BigFloat> steps{abs(column[n - 1] - column[n - 2])};
  std::optional<BigFloat> converged_spread;
  const long tiny_shift = -static_cast<long>(wp) + 4;

  for (std::size_t order = 1; column.size() > 1; ++order) {
    std::vector<BigFloat> next;
    next.reserve(column.size() - 1);
    bool stalled = false;
    for (std::size_t i = 0; i + 1 < column.size(); ++i) {
      BigFloat diff = column[i + 1] - column[i];
      const long scale = column[i].is_zero() ? 0 : column[i].exponent();
      if (diff.is_zero() || abs(diff) <= BigFloat::exp2(scale + tiny_shift, 64)) {
        stalled = true;
        break;
      }
      next.push_back(before[i + 1] + BigFloat(1, wp) / diff);
    }
    if (stalled) {
      // The previous column already agrees to working precision.
      if ((order - 1) % 2 == 0) {
        BigFloat spread(wp);
        for (const auto& v : column) spread = std::max(spread, abs(v - column.back()));
        converged_spread = spread;
      }
      break;
    }
    for (const auto& v : next) {
      if (!v.is_finite()) throw NumericalBreakdownError("wynn_epsilon: non-finite table entry");
    }
    before = std::move(column);
    column = std::move(next);
    if (order % 2 == 0 && column.size() >= 2) {
      estimates.push_back(column.back());
      steps.push_back(abs(column[column.size() - 1] - column[column.size() - 2]));
    }
  }

  if (converged_spread) {
    const BigFloat& estimate = estimates.back();
    NumericValue out{estimate.rounded(precision), BigFloat(precision), n, EvalMethod::accelerated,
                     AccelMethod::wynn_epsilon};
    out.error_bound = (*converged_spread + rounding_floor(estimate, precision)).rounded(precision);
    return out;
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k < steps.size(); ++k) {
    if (steps[k] < steps[best]) best = k;
  }
  const BigFloat& estimate = estimates[best];
  BigFloat bound = steps[best];
  for (std::size_t k = best > 0 ? best - 1 : 0; k <= best + 1 && k < estimates.size(); ++k) {
    bound = std::max(bound, abs(estimates[k] - estimate));
  }
  NumericValue out{estimate.rounded(precision), BigFloat(precision), n, EvalMethod::accelerated,
                   AccelMethod::wynn_epsilon};
  out.error_bound = (bound + rounding_floor(estimate, precision)).rounded(precision);
  return out;
}

NumericValue accelerate(std::span<const BigFloat> partial_sums, AccelMethod method, Bits precision) {
  require_length(partial_sums.size());
  if (method == AccelMethod::wynn_epsilon) return wynn_epsilon(partial_sums, precision);
  const Bits wp = precision + kGuardBits;
  std::vector<BigFloat> terms;
  terms.reserve(partial_sums.size());
  terms.push_back(partial_sums[0].rounded(wp));
  for (std::size_t k = 1; k < partial_sums.size(); ++k) {
    terms.push_back(partial_sums[k].rounded(wp) - partial_sums[k - 1].rounded(wp));
  }
  return levin_u(partial_sums, terms, precision);
}

}  // namespace hypersum
