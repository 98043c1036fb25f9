#pragma once

#include <cstdint>

#include "hypersum/exact_value.hpp"
#include "hypersum/rational.hpp"

namespace hypersum {

/// Largest |argument| accepted by the exact gamma and factorial routines.
inline constexpr std::int64_t kMaxExactGammaArgument = 20000;

/// Rising factorial (lambda)_n = lambda (lambda+1) ... (lambda+n-1); (lambda)_0 = 1.
Rational pochhammer(const Rational& lambda, std::uint64_t n);

/// n! for n >= 0.
BigInt factorial(std::uint64_t n);

/// Gamma at a half-integer: (k-1)! for positive integers, a rational multiple of
/// sqrt(pi) for odd multiples of 1/2. Throws PoleError at 0, -1, -2, ...
ExactValue exact_gamma(const HalfInteger& x);

/// Convenience overload; throws DomainError when x is not a multiple of 1/2.
ExactValue exact_gamma(const Rational& x);

/// 2^e for a half-integer exponent; the half power becomes sqrt2.
ExactValue two_power(const HalfInteger& e);
ExactValue two_power(const Rational& e);

}  // namespace hypersum
