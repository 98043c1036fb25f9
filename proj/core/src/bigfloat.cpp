#include "hypersum/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include "hypersum/errors.hpp"

namespace hypersum {

long digits_for_bits(Bits bits) {
  return static_cast<long>(std::floor(static_cast<double>(bits) * 0.30102999566398119521));
}

Bits bits_for_digits(long digits) {
  return static_cast<Bits>(std::ceil(static_cast<double>(digits) * 3.32192809488736234787));
}

namespace {

void check_precision(Bits p) {
  if (p < MPFR_PREC_MIN || p > MPFR_PREC_MAX) {
    throw DomainError("precision out of range: " + std::to_string(p));
  }
}

}  // namespace

BigFloat::BigFloat(Bits precision) {
  check_precision(precision);
  mpfr_init2(v_, precision);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, Bits precision) : BigFloat(precision) {
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, Bits precision) : BigFloat(precision) {
  mpfr_set_q(v_, value.get().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt& value, Bits precision) : BigFloat(precision) {
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::~BigFloat() {
  if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Steal the limb storage; the moved-from object is left empty and only destructible.
  v_[0] = other.v_[0];
  other.v_[0]._mpfr_d = nullptr;
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    if (v_[0]._mpfr_d == nullptr) {
      mpfr_init2(v_, other.precision());
    } else {
      mpfr_set_prec(v_, other.precision());
    }
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) {
    if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
    v_[0] = other.v_[0];
    other.v_[0]._mpfr_d = nullptr;
  }
  return *this;
}

BigFloat BigFloat::parse(std::string_view text, Bits precision) {
  BigFloat r(precision);
  const std::string s(text);
  if (s.empty()) throw ParseError("empty decimal literal");
  char* end = nullptr;
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') throw ParseError("not a decimal number: '" + s + "'");
  if (!r.is_finite()) throw ParseError("not a finite number: '" + s + "'");
  return r;
}

BigFloat BigFloat::pi(Bits precision) {
  BigFloat r(precision);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt2(Bits precision) {
  BigFloat r(precision);
  mpfr_sqrt_ui(r.v_, 2, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::ln2(Bits precision) {
  BigFloat r(precision);
  mpfr_const_log2(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp2(long e, Bits precision) {
  BigFloat r(1, precision);
  mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::rounded(Bits precision) const {
  BigFloat r(precision);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

BigInt BigFloat::round_to_integer() const {
  if (!is_finite()) throw NumericalBreakdownError("cannot round a non-finite value");
  BigInt z;
  BigFloat tmp(precision());
  mpfr_round(tmp.v_, v_);
  mpfr_get_z(z.get_mpz_t(), tmp.v_, MPFR_RNDN);
  return z;
}

std::string BigFloat::to_string(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  const int n = mpfr_snprintf(nullptr, 0, "%.*Re", significant_digits - 1, v_);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", significant_digits - 1, v_);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

void BigFloat::grow_to(Bits precision) {
  if (precision > this->precision()) mpfr_prec_round(v_, precision, MPFR_RNDN);
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  grow_to(rhs.precision());
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  grow_to(rhs.precision());
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  grow_to(rhs.precision());
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  grow_to(rhs.precision());
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const Rational& rhs) {
  mpfr_mul_q(v_, v_, rhs.get().get_mpq_t(), MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division of BigFloat by zero rational");
  mpfr_div_q(v_, v_, rhs.get().get_mpq_t(), MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigInt& rhs) {
  mpfr_mul_z(v_, v_, rhs.get_mpz_t(), MPFR_RNDN);
  return *this;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.raw(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.raw(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_exp(r.raw(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_log(r.raw(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& base, const BigFloat& exponent) {
  BigFloat r(std::max(base.precision(), exponent.precision()));
  mpfr_pow(r.raw(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& base, long exponent) {
  BigFloat r(base.precision());
  mpfr_pow_si(r.raw(), base.get(), exponent, MPFR_RNDN);
  return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r(x);
  mpfr_mul_2si(r.raw(), r.get(), e, MPFR_RNDN);
  return r;
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
  return os << x.to_string(static_cast<int>(digits_for_bits(x.precision())));
}

}  // namespace hypersum
