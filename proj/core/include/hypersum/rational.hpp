#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hypersum {

using BigInt = mpz_class;

/// Arbitrary-precision rational in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}
  explicit Rational(const BigInt& integer) : q_(integer) {}
  explicit Rational(mpq_class q);

  /// Accepts "n", "-n", "p/q"; surrounding whitespace is rejected.
  static Rational parse(std::string_view text);

  const mpq_class& get() const noexcept { return q_; }
  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  bool is_zero() const noexcept { return sgn(q_) == 0; }
  bool is_integer() const noexcept { return q_.get_den() == 1; }
  bool is_nonpositive_integer() const noexcept { return is_integer() && sgn(q_) <= 0; }
  int sign() const noexcept { return sgn(q_); }

  /// Value as a signed 64-bit integer; throws DomainError if not an integer in range.
  std::int64_t to_int64() const;

  /// "n" for integers, "p/q" otherwise.
  std::string str() const;
  /// Always "p/q", including "n/1" for integers.
  std::string str_pq() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class q_;
};

Rational abs(const Rational& x);
/// x^e for integer e; 0^negative throws DomainError.
Rational pow(const Rational& x, long e);
std::ostream& operator<<(std::ostream& os, const Rational& x);

/// An exact multiple of one half, stored as twice its value.
class HalfInteger {
public:
  HalfInteger() = default;
  explicit HalfInteger(BigInt twice_value) : twice_(std::move(twice_value)) {}

  static HalfInteger from_integer(const BigInt& value) { return HalfInteger(BigInt(2 * value)); }
  static std::optional<HalfInteger> try_from(const Rational& x);
  /// Throws DomainError when x is not a multiple of 1/2.
  static HalfInteger from(const Rational& x);

  const BigInt& twice_value() const noexcept { return twice_; }
  bool is_integer() const { return mpz_even_p(twice_.get_mpz_t()) != 0; }
  bool is_nonpositive_integer() const { return is_integer() && sgn(twice_) <= 0; }
  Rational to_rational() const { return Rational(twice_, BigInt(2)); }

  HalfInteger operator+(const HalfInteger& rhs) const { return HalfInteger(BigInt(twice_ + rhs.twice_)); }
  HalfInteger operator-(const HalfInteger& rhs) const { return HalfInteger(BigInt(twice_ - rhs.twice_)); }
  HalfInteger operator-() const { return HalfInteger(BigInt(-twice_)); }

  friend bool operator==(const HalfInteger& a, const HalfInteger& b) { return a.twice_ == b.twice_; }

private:
  BigInt twice_;
};

std::ostream& operator<<(std::ostream& os, const HalfInteger& x);

}  // namespace hypersum
