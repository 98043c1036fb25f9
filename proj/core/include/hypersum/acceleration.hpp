#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "hypersum/bigfloat.hpp"

namespace hypersum {

enum class AccelMethod { levin_u, wynn_epsilon };

std::string_view to_string(AccelMethod m) noexcept;
std::optional<AccelMethod> parse_accel_method(std::string_view name);

enum class EvalMethod { direct, terminating, accelerated };

std::string_view to_string(EvalMethod m) noexcept;

/// Numeric result with an absolute error estimate.
struct NumericValue {
  BigFloat estimate;
  BigFloat error_bound;
  std::uint64_t terms_used = 0;
  EvalMethod method = EvalMethod::direct;
  std::optional<AccelMethod> accelerator;
};

/// Minimum number of partial sums accepted by accelerate().
inline constexpr std::size_t kMinPartialSums = 8;

/// Extrapolates the limit of a sequence of partial sums.
///
/// levin_u uses the u-variant remainder estimates (k + 1) a_k with a_k = s_k - s_{k-1}
/// and walks the transformation order upward from the first sum; wynn_epsilon runs
/// the epsilon table over the whole sequence. The error bound is the difference
/// between consecutive extrapolation orders at the reported estimate, a heuristic and
/// not a rigorous enclosure. Arithmetic runs at precision + kGuardBits.
///
/// Throws DomainError for fewer than kMinPartialSums sums and NumericalBreakdownError
/// when the transformation cannot form a finite estimate.
NumericValue accelerate(std::span<const BigFloat> partial_sums, AccelMethod method, Bits precision);

/// Levin u with explicitly supplied terms; the terms must satisfy
/// terms[k] = partial_sums[k] - partial_sums[k-1] (terms[0] = partial_sums[0]).
NumericValue levin_u(std::span<const BigFloat> partial_sums, std::span<const BigFloat> terms,
                     Bits precision);

NumericValue wynn_epsilon(std::span<const BigFloat> partial_sums, Bits precision);

}  // namespace hypersum
