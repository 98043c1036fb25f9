#pragma once

#include <optional>
#include <string_view>

#include "hypersum/bigfloat.hpp"
#include "hypersum/exact_value.hpp"
#include "hypersum/rational.hpp"
#include "hypersum/series.hpp"

namespace hypersum {

/// The eight classical and extended summation theorems.
enum class Theorem {
  gauss,
  gauss_ext,
  gauss_second,
  gauss_second_ext,
  bailey,
  bailey_ext,
  watson,
  watson_ext,
};

std::string_view to_string(Theorem t) noexcept;
std::optional<Theorem> parse_theorem(std::string_view name);
/// True for the four extensions, which take the extra parameter d.
bool takes_d(Theorem t) noexcept;

/// Parameters of a theorem; unused fields are ignored.
struct TheoremParams {
  Rational a;
  Rational b;
  Rational c;
  std::optional<Rational> d;
};

/// The series each theorem sums, e.g. 2F1(a, b; c; 1) for Gauss.
SeriesSpec theorem_series(Theorem t, const TheoremParams& p);

// Exact evaluators. Parameters must make every gamma argument a half-integer
// (otherwise DomainError). PoleError when a gamma argument is a non-positive
// integer; DomainError when the convergence condition or d > 0 fails.

/// 2F1(a, b; c; 1) = G(c) G(c-a-b) / (G(c-a) G(c-b)), c - a - b > 0.
ExactValue gauss(const Rational& a, const Rational& b, const Rational& c);
/// 3F2(a, b, d+1; c+1, d; 1).
ExactValue gauss_ext(const Rational& a, const Rational& b, const Rational& c, const Rational& d);
/// 2F1(a, b; (a+b+1)/2; 1/2).
ExactValue gauss_second(const Rational& a, const Rational& b);
/// 3F2(a, b, d+1; (a+b+3)/2, d; 1/2).
ExactValue gauss_second_ext(const Rational& a, const Rational& b, const Rational& d);
/// 2F1(a, 1-a; c; 1/2) = 2^(1-c) sqrt(pi) G(c) / (G((c+a)/2) G((c-a+1)/2)).
ExactValue bailey(const Rational& a, const Rational& c);
/// 3F2(a, 1-a, d+1; c+1, d; 1/2).
ExactValue bailey_ext(const Rational& a, const Rational& c, const Rational& d);
/// 3F2(a, b, c; (a+b+1)/2, 2c; 1), 2c - a - b > -1.
ExactValue watson(const Rational& a, const Rational& b, const Rational& c);
/// 4F3(a, b, c, d+1; (a+b+1)/2, 2c+1, d; 1).
ExactValue watson_ext(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

ExactValue evaluate(Theorem t, const TheoremParams& p);

namespace numeric {

/// Same closed forms with gamma evaluated numerically, so any rational parameters
/// with non-pole gamma arguments are accepted. Conditions are checked as in the
/// exact path.
BigFloat evaluate(Theorem t, const TheoremParams& p, Bits precision);

/// Bailey's theorem with the numerator G(1/2) G(c/2 + 1/2) exactly as it is
/// sometimes typeset. Kept only to document that this form does not sum the series.
BigFloat bailey_typeset(const Rational& a, const Rational& c, Bits precision);

}  // namespace numeric

}  // namespace hypersum
