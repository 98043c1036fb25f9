#pragma once

#include <cstdint>

#include "hypersum/acceleration.hpp"
#include "hypersum/bigfloat.hpp"
#include "hypersum/exact_value.hpp"
#include "hypersum/series.hpp"

namespace hypersum {

struct PfqOptions {
  std::uint64_t max_terms = 5000;
  AccelMethod accel = AccelMethod::levin_u;
};

/// Numeric value of a convergent pFq.
///
/// - terminating: the finite sum is formed exactly in rationals and rounded once;
///   error_bound is 0.
/// - geometric: direct summation at precision + kGuardBits until the tail bound from
///   the eventually-geometric term ratio drops below one unit of working precision.
/// - unity_convergent: partial sums are extrapolated with opts.accel. Levin u consumes
///   the sums in order; Wynn epsilon is fed the sums at indices 2^j - 1, which turns
///   the algebraic tail into a sum of geometric components.
///
/// Throws DivergentError for divergent series and BudgetExceededError when
/// opts.max_terms cannot reach the requested precision (geometric) or cannot supply
/// the minimum number of partial sums (accelerated).
NumericValue pfq_eval(const SeriesSpec& spec, Bits precision, const PfqOptions& opts = {});

/// Exact rational sum of a terminating series; throws DomainError otherwise.
Rational pfq_terminating_sum(const SeriesSpec& spec);

/// Ratio t_{k+1} / t_k of consecutive series terms, exactly.
Rational term_ratio(const SeriesSpec& spec, std::uint64_t k);

/// Partial sums s_0 .. s_{count-1} at the given working precision.
std::vector<BigFloat> pfq_partial_sums(const SeriesSpec& spec, std::size_t count, Bits working_precision);

/// Evaluates an exact value with sqrt2 and pi at precision + kGuardBits, rounded once.
BigFloat ev_to_numeric(const ExactValue& x, Bits precision);

}  // namespace hypersum
