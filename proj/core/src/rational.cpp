#include "hypersum/rational.hpp"

#include <ostream>

#include "hypersum/errors.hpp"

namespace hypersum {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("not an integer literal: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError("denominator must be an unsigned integer: '" + std::string(text) + "'");
  }
  const BigInt den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::int64_t Rational::to_int64() const {
  if (!is_integer() || !q_.get_num().fits_slong_p()) {
    throw DomainError("expected a machine-sized integer, got " + str());
  }
  return q_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::str_pq() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("rational division by zero");
  q_ /= rhs.q_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& x, long e) {
  if (e < 0) {
    if (x.is_zero()) throw DomainError("zero raised to a negative power");
    return Rational(1) / pow(x, -e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), x.get().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

std::optional<HalfInteger> HalfInteger::try_from(const Rational& x) {
  const BigInt& den = x.get().get_den();
  if (den == 1) return HalfInteger(BigInt(2 * x.get().get_num()));
  if (den == 2) return HalfInteger(BigInt(x.get().get_num()));
  return std::nullopt;
}

HalfInteger HalfInteger::from(const Rational& x) {
  auto h = try_from(x);
  if (!h) throw DomainError("not a half-integer: " + x.str());
  return *h;
}

std::ostream& operator<<(std::ostream& os, const HalfInteger& x) { return os << x.to_rational(); }

}  // namespace hypersum
