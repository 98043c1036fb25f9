#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "hypersum/rational.hpp"

namespace hypersum {

/// Binary precision in bits. Every BigFloat carries its own; there is no global default.
using Bits = mpfr_prec_t;

/// Guard bits added on top of a requested precision for series work.
inline constexpr Bits kGuardBits = 32;

/// Decimal digits represented by a binary precision (rounded down).
long digits_for_bits(Bits bits);
/// Bits needed to hold a number of decimal digits (rounded up).
Bits bits_for_digits(long digits);

/// RAII wrapper over an MPFR number. All operations round to nearest; binary
/// operations produce a result at the larger of the operand precisions.
class BigFloat {
public:
  explicit BigFloat(Bits precision);
  BigFloat(long value, Bits precision);
  BigFloat(const Rational& value, Bits precision);
  BigFloat(const BigInt& value, Bits precision);
  ~BigFloat();

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;

  /// Decimal or scientific literal ("3.14", "-1.2e-5"). Throws ParseError.
  static BigFloat parse(std::string_view text, Bits precision);
  static BigFloat pi(Bits precision);
  static BigFloat sqrt2(Bits precision);
  static BigFloat ln2(Bits precision);
  /// 2^e exactly.
  static BigFloat exp2(long e, Bits precision);

  Bits precision() const noexcept { return mpfr_get_prec(v_); }
  /// Same value rounded to a different precision.
  BigFloat rounded(Bits precision) const;

  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr raw() noexcept { return v_; }

  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; meaningless for zero.
  long exponent() const noexcept { return mpfr_get_exp(v_); }
  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Nearest integer, ties away from zero.
  BigInt round_to_integer() const;

  /// Scientific notation with the given number of significant digits, e.g. "1.5707963e+00".
  std::string to_string(int significant_digits) const;

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat& operator*=(const Rational& rhs);
  BigFloat& operator/=(const Rational& rhs);
  BigFloat& operator*=(const BigInt& rhs);

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator*(BigFloat a, const Rational& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const Rational& b) { return a /= b; }
  friend BigFloat operator*(BigFloat a, const BigInt& b) { return a *= b; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

private:
  void grow_to(Bits precision);

  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat pow(const BigFloat& base, const BigFloat& exponent);
BigFloat pow(const BigFloat& base, long exponent);
/// x * 2^e.
BigFloat ldexp(const BigFloat& x, long e);

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

}  // namespace hypersum
