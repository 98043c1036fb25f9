#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hypersum/bigfloat.hpp"
#include "hypersum/exact_value.hpp"
#include "hypersum/rational.hpp"

namespace hypersum {

enum class Confidence { confirmed, tentative, none };

std::string_view to_string(Confidence c) noexcept;

struct RelationResult {
  std::vector<BigInt> coefficients;  // empty when no relation was found
  BigFloat residual{64};             // |sum r_i x_i|
  Confidence confidence = Confidence::none;
  std::size_t iterations = 0;
};

/// PSLQ iteration cap.
inline constexpr std::size_t kPslqMaxIterations = 20000;

/// Searches for an integer vector r with sum r_i x_i = 0 and max |r_i| <= coeff_bound
/// using PSLQ with gamma = 2/sqrt(3) + 2^-10. The returned relation is primitive with
/// its first non-zero coefficient positive. It is confirmed when the residual is
/// below 2^(-precision/2) and the coefficients respect the bound.
///
/// DomainError for fewer than two values or precision < 128. PrecisionTooLowError when
/// precision < n * bitlength(coeff_bound) + 32, where chance relations of that size
/// become indistinguishable from true ones.
RelationResult find_relation(std::span<const BigFloat> values, Bits precision, const BigInt& coeff_bound);

/// The constants 1, pi, pi^2, sqrt2 and sqrt2*pi.
const std::vector<ExactValue>& default_recognition_basis();

struct Recognition {
  std::optional<ExactValue> value;
  Confidence confidence = Confidence::none;
  RelationResult relation;
};

/// Looks for x as a rational combination of the basis. A result over any basis other
/// than the default one is reported as tentative at best.
Recognition recognize_over(const BigFloat& x, std::span<const ExactValue> basis, Bits precision,
                           const BigInt& coeff_bound);

/// Exact form of x over the default basis, re-checked at precision + 64 bits to
/// 2^(-precision + 16) relative agreement. Returns nullopt on any failure.
std::optional<ExactValue> recognize(const BigFloat& x, Bits precision, const BigInt& coeff_bound);

}  // namespace hypersum
