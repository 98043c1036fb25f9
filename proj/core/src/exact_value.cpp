#include "hypersum/exact_value.hpp"

#include <ostream>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypersum/errors.hpp"

namespace hypersum {

ExactValue::ExactValue(const Rational& q) {
  if (!q.is_zero()) terms_.emplace(Monomial{}, q);
}

ExactValue ExactValue::monomial(const Rational& coeff, int sqrt2, long sqrtpi_pow) {
  if (sqrt2 < 0) throw DomainError("negative power of sqrt2 is not a canonical monomial");
  ExactValue v;
  // sqrt2^2 folds into the rational coefficient.
  Rational c = coeff * pow(Rational(2), sqrt2 / 2);
  v.add_term(Monomial{sqrt2 % 2, sqrtpi_pow}, c);
  return v;
}

Rational ExactValue::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExactValue::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExactValue ExactValue::operator-() const {
  ExactValue r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

ExactValue& ExactValue::operator+=(const ExactValue& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

ExactValue& ExactValue::operator-=(const ExactValue& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

ExactValue& ExactValue::operator*=(const ExactValue& rhs) {
  ExactValue product;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      const int s = ma.sqrt2 + mb.sqrt2;
      Rational c = ca * cb;
      if (s == 2) c *= Rational(2);
      product.add_term(Monomial{s % 2, ma.sqrtpi_pow + mb.sqrtpi_pow}, c);
    }
  }
  *this = std::move(product);
  return *this;
}

ExactValue& ExactValue::operator/=(const ExactValue& rhs) {
  if (rhs.is_zero()) throw NonInvertibleError("division by zero ExactValue");
  if (!rhs.is_monomial()) {
    throw NonInvertibleError("divisor " + rhs.str() + " has more than one term");
  }
  const auto& [m, c] = *rhs.terms_.begin();
  // 1/sqrt2 = sqrt2/2
  Rational inv = Rational(1) / c;
  if (m.sqrt2 == 1) inv /= Rational(2);
  return *this *= monomial(inv, m.sqrt2, -m.sqrtpi_pow);
}

namespace {

std::string pi_factor(long h) {
  std::string out;
  long k = h / 2;
  if (h % 2 != 0) {
    if (h < 0) --k;  // floor division
    out = "sqrt(pi)";
  }
  if (k != 0) {
    if (!out.empty()) out += "*";
    out += (k == 1) ? std::string("pi") : "pi^" + std::to_string(k);
  }
  return out;
}

std::string render_term(const Monomial& m, const Rational& magnitude) {
  std::string factors;
  if (m.sqrt2 == 1) factors = "sqrt2";
  if (std::string pf = pi_factor(m.sqrtpi_pow); !pf.empty()) {
    if (!factors.empty()) factors += "*";
    factors += pf;
  }
  const std::string num = magnitude.numerator().get_str();
  const std::string den = magnitude.denominator().get_str();
  if (factors.empty()) return magnitude.str();
  std::string out = (num == "1") ? factors : num + "*" + factors;
  if (den != "1") out += "/" + den;
  return out;
}

}  // namespace

std::string ExactValue::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += render_term(m, abs(c));
    first = false;
  }
  return out;
}

ExactValue ev_arith(ArithKind kind, const ExactValue& x, const ExactValue& y) {
  switch (kind) {
    case ArithKind::add: return x + y;
    case ArithKind::sub: return x - y;
    case ArithKind::mul: return x * y;
    case ArithKind::div: return x / y;
  }
  throw DomainError("unknown arithmetic kind");
}

std::ostream& operator<<(std::ostream& os, const ExactValue& x) { return os << x.str(); }

nlohmann::json to_json(const ExactValue& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : x.terms()) {
    terms.push_back({{"coeff", c.str_pq()}, {"sqrt2", m.sqrt2}, {"sqrtpi_pow", m.sqrtpi_pow}});
  }
  return terms;
}

ExactValue exact_value_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("ExactValue JSON must be an array of terms");
  ExactValue v;
  for (const auto& t : j) {
    const int s = t.at("sqrt2").get<int>();
    if (s != 0 && s != 1) throw ParseError("sqrt2 exponent must be 0 or 1");
    v += ExactValue::monomial(Rational::parse(t.at("coeff").get<std::string>()), s,
                              t.at("sqrtpi_pow").get<long>());
  }
  return v;
}

}  // namespace hypersum
