#pragma once

#include <compare>
#include <map>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "hypersum/rational.hpp"

namespace hypersum {

/// The monomial sqrt(2)^sqrt2 * sqrt(pi)^sqrtpi_pow; pi itself is sqrtpi_pow == 2.
struct Monomial {
  int sqrt2 = 0;  // 0 or 1
  long sqrtpi_pow = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Canonical order: by sqrtpi_pow, then sqrt2.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.sqrtpi_pow <=> b.sqrtpi_pow; c != 0) return c;
    return a.sqrt2 <=> b.sqrt2;
  }
};

/// Element of Q[sqrt2, sqrt(pi)] kept in canonical form: a map from monomial to a
/// non-zero rational coefficient. Equality is structural.
class ExactValue {
public:
  using Terms = std::map<Monomial, Rational>;

  ExactValue() = default;
  ExactValue(const Rational& q);  // NOLINT(google-explicit-constructor)
  ExactValue(long q) : ExactValue(Rational(q)) {}  // NOLINT(google-explicit-constructor)

  static ExactValue monomial(const Rational& coeff, int sqrt2, long sqrtpi_pow);
  static ExactValue pi(const Rational& coeff = Rational(1)) { return monomial(coeff, 0, 2); }
  static ExactValue sqrt_pi(const Rational& coeff = Rational(1)) { return monomial(coeff, 0, 1); }
  static ExactValue sqrt2(const Rational& coeff = Rational(1)) { return monomial(coeff, 1, 0); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// Coefficient of a monomial, zero when absent.
  Rational coefficient(const Monomial& m) const;

  ExactValue operator-() const;
  ExactValue& operator+=(const ExactValue& rhs);
  ExactValue& operator-=(const ExactValue& rhs);
  ExactValue& operator*=(const ExactValue& rhs);
  /// Division is only defined for single-monomial divisors; throws NonInvertibleError otherwise.
  ExactValue& operator/=(const ExactValue& rhs);

  friend ExactValue operator+(ExactValue a, const ExactValue& b) { return a += b; }
  friend ExactValue operator-(ExactValue a, const ExactValue& b) { return a -= b; }
  friend ExactValue operator*(ExactValue a, const ExactValue& b) { return a *= b; }
  friend ExactValue operator/(ExactValue a, const ExactValue& b) { return a /= b; }
  friend bool operator==(const ExactValue&, const ExactValue&) = default;

  /// Human-readable form, e.g. "pi^2/4 + 1", "3*sqrt2*pi/8". Terms run from the
  /// highest power of pi down, so the rendering reads the way the formulas are written.
  std::string str() const;

private:
  void add_term(const Monomial& m, const Rational& coeff);

  Terms terms_;
};

enum class ArithKind { add, sub, mul, div };

ExactValue ev_arith(ArithKind kind, const ExactValue& x, const ExactValue& y);

std::ostream& operator<<(std::ostream& os, const ExactValue& x);

/// JSON term list in canonical (sqrtpi_pow, sqrt2) ascending order:
/// [{"coeff": "p/q", "sqrt2": 0|1, "sqrtpi_pow": k}, ...].
nlohmann::json to_json(const ExactValue& x);
ExactValue exact_value_from_json(const nlohmann::json& j);

}  // namespace hypersum
