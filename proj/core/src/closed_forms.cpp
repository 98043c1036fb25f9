#include "hypersum/closed_forms.hpp"

#include "hypersum/errors.hpp"
#include "hypersum/exact_gamma.hpp"
#include "hypersum/numeric_gamma.hpp"

namespace hypersum {

std::string_view to_string(Theorem t) noexcept {
  switch (t) {
    case Theorem::gauss: return "gauss";
    case Theorem::gauss_ext: return "gauss_ext";
    case Theorem::gauss_second: return "gauss_second";
    case Theorem::gauss_second_ext: return "gauss_second_ext";
    case Theorem::bailey: return "bailey";
    case Theorem::bailey_ext: return "bailey_ext";
    case Theorem::watson: return "watson";
    case Theorem::watson_ext: return "watson_ext";
  }
  return "unknown";
}

std::optional<Theorem> parse_theorem(std::string_view name) {
  for (Theorem t : {Theorem::gauss, Theorem::gauss_ext, Theorem::gauss_second, Theorem::gauss_second_ext,
                    Theorem::bailey, Theorem::bailey_ext, Theorem::watson, Theorem::watson_ext}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

bool takes_d(Theorem t) noexcept {
  return t == Theorem::gauss_ext || t == Theorem::gauss_second_ext || t == Theorem::bailey_ext ||
         t == Theorem::watson_ext;
}

namespace {

const Rational kHalf(1, 2);

void require_positive_d(const Rational& d) {
  if (d.sign() <= 0) throw DomainError("extension requires d > 0, got d = " + d.str());
}

void require_gauss_condition(const Rational& a, const Rational& b, const Rational& c) {
  if ((c - a - b).sign() <= 0) {
    throw DomainError("Gauss condition c - a - b > 0 fails: c - a - b = " + (c - a - b).str());
  }
}

void require_watson_condition(const Rational& a, const Rational& b, const Rational& c) {
  if (Rational(2) * c - a - b <= Rational(-1)) {
    throw DomainError("Watson condition 2c - a - b > -1 fails: 2c - a - b = " +
                      (Rational(2) * c - a - b).str());
  }
}

// Exact backend: gamma at half-integers in Q[sqrt2, sqrt(pi)].
struct ExactAlgebra {
  using Value = ExactValue;
  Value gamma(const Rational& x) const { return exact_gamma(HalfInteger::from(x)); }
  /// 1/Gamma(x), which vanishes at the poles of Gamma.
  Value rgamma(const Rational& x) const {
    const HalfInteger h = HalfInteger::from(x);
    if (h.is_nonpositive_integer()) return Value();
    return Value(1) / exact_gamma(h);
  }
  Value constant(const Rational& q) const { return Value(q); }
  Value two_pow(const Rational& e) const { return two_power(HalfInteger::from(e)); }
  Value sqrt_pi() const { return Value::sqrt_pi(); }
};

// Numeric backend: any rational argument away from the poles.
struct NumericAlgebra {
  using Value = BigFloat;
  Bits wp;
  Value gamma(const Rational& x) const {
    if (x.is_nonpositive_integer()) throw PoleError("gamma has a pole at " + x.str());
    return num_gamma(BigFloat(x, wp), wp);
  }
  Value rgamma(const Rational& x) const {
    if (x.is_nonpositive_integer()) return Value(wp);
    return Value(1, wp) / num_gamma(BigFloat(x, wp), wp);
  }
  Value constant(const Rational& q) const { return Value(q, wp); }
  Value two_pow(const Rational& e) const { return pow(Value(2, wp), Value(e, wp)); }
  Value sqrt_pi() const { return sqrt(Value::pi(wp)); }
};

template <class Alg>
typename Alg::Value gauss_t(const Alg& g, const Rational& a, const Rational& b, const Rational& c) {
  require_gauss_condition(a, b, c);
  if (a.is_zero() || b.is_zero()) return g.constant(Rational(1));
  return g.gamma(c) * g.gamma(c - a - b) * g.rgamma(c - a) * g.rgamma(c - b);
}

template <class Alg>
typename Alg::Value gauss_ext_t(const Alg& g, const Rational& a, const Rational& b, const Rational& c,
                                const Rational& d) {
  require_positive_d(d);
  require_gauss_condition(a, b, c);
  if (a.is_zero() || b.is_zero()) return g.constant(Rational(1));
  const Rational one(1);
  return g.gamma(c + one) * g.gamma(c - a - b) * g.rgamma(c - a + one) * g.rgamma(c - b + one) *
         g.constant((c - a - b) + a * b / d);
}

template <class Alg>
typename Alg::Value gauss_second_t(const Alg& g, const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return g.constant(Rational(1));
  return g.sqrt_pi() * g.gamma(kHalf * (a + b + Rational(1))) * g.rgamma(kHalf * (a + Rational(1))) *
         g.rgamma(kHalf * (b + Rational(1)));
}

template <class Alg>
typename Alg::Value gauss_second_ext_t(const Alg& g, const Rational& a, const Rational& b,
                                       const Rational& d) {
  require_positive_d(d);
  if (a.is_zero() || b.is_zero()) return g.constant(Rational(1));
  const Rational one(1);
  const Rational half_diff = kHalf * (a - b);
  auto prefactor = g.sqrt_pi() * g.gamma(kHalf * (a + b) + Rational(3, 2)) * g.gamma(half_diff - kHalf) *
                   g.rgamma(half_diff + Rational(3, 2));
  auto first = g.constant(kHalf * (a + b - one) - a * b / d) * g.rgamma(kHalf * (a + one)) *
               g.rgamma(kHalf * (b + one));
  auto second = g.constant((a + b + one) / d - Rational(2)) * g.rgamma(kHalf * a) * g.rgamma(kHalf * b);
  return prefactor * (first + second);
}

template <class Alg>
typename Alg::Value bailey_t(const Alg& g, const Rational& a, const Rational& c) {
  // Gamma(c/2) Gamma(c/2 + 1/2) = 2^(1-c) sqrt(pi) Gamma(c)
  const Rational one(1);
  if (a.is_zero() || a == one) return g.constant(one);
  return g.two_pow(one - c) * g.sqrt_pi() * g.gamma(c) * g.rgamma(kHalf * (c + a)) *
         g.rgamma(kHalf * (c - a + one));
}

template <class Alg>
typename Alg::Value bailey_ext_t(const Alg& g, const Rational& a, const Rational& c, const Rational& d) {
  require_positive_d(d);
  const Rational one(1);
  if (a.is_zero() || a == one) return g.constant(one);
  auto prefactor = g.two_pow(-c) * g.sqrt_pi() * g.gamma(c + one);
  auto first = g.constant(Rational(2) / d) * g.rgamma(kHalf * (a + c)) * g.rgamma(kHalf * (c - a + one));
  auto second = g.constant(one - c / d) * g.rgamma(kHalf * (a + c + one)) *
                g.rgamma(kHalf * (c - a) + one);
  return prefactor * (first + second);
}

template <class Alg>
typename Alg::Value watson_t(const Alg& g, const Rational& a, const Rational& b, const Rational& c) {
  require_watson_condition(a, b, c);
  if (a.is_zero() || b.is_zero()) return g.constant(Rational(1));
  const Rational one(1);
  return g.sqrt_pi() * g.gamma(c + kHalf) * g.gamma(kHalf * (a + b + one)) *
         g.gamma(c - kHalf * (a + b) + kHalf) * g.rgamma(kHalf * (a + one)) * g.rgamma(kHalf * (b + one)) *
         g.rgamma(c - kHalf * a + kHalf) * g.rgamma(c - kHalf * b + kHalf);
}

template <class Alg>
typename Alg::Value watson_ext_t(const Alg& g, const Rational& a, const Rational& b, const Rational& c,
                                 const Rational& d) {
  require_positive_d(d);
  require_watson_condition(a, b, c);
  if (a.is_zero() || b.is_zero()) return g.constant(Rational(1));
  const Rational one(1);
  auto prefactor = g.two_pow(a + b - Rational(2)) * g.gamma(c + kHalf) * g.gamma(kHalf * (a + b + one)) *
                   g.gamma(c - kHalf * (a + b) + kHalf) * g.rgamma(kHalf) * g.rgamma(a) * g.rgamma(b);
  auto first = g.gamma(kHalf * a) * g.gamma(kHalf * b) * g.rgamma(c - kHalf * a + kHalf) *
               g.rgamma(c - kHalf * b + kHalf);
  auto second = g.constant((Rational(2) * c - d) / d) * g.gamma(kHalf * (a + one)) *
                g.gamma(kHalf * (b + one)) * g.rgamma(c - kHalf * a + one) * g.rgamma(c - kHalf * b + one);
  return prefactor * (first + second);
}

const Rational& need_d(const TheoremParams& p, Theorem t) {
  if (!p.d) throw DomainError(std::string(to_string(t)) + " requires the parameter d");
  return *p.d;
}

template <class Alg>
typename Alg::Value dispatch(const Alg& g, Theorem t, const TheoremParams& p) {
  switch (t) {
    case Theorem::gauss: return gauss_t(g, p.a, p.b, p.c);
    case Theorem::gauss_ext: return gauss_ext_t(g, p.a, p.b, p.c, need_d(p, t));
    case Theorem::gauss_second: return gauss_second_t(g, p.a, p.b);
    case Theorem::gauss_second_ext: return gauss_second_ext_t(g, p.a, p.b, need_d(p, t));
    case Theorem::bailey: return bailey_t(g, p.a, p.c);
    case Theorem::bailey_ext: return bailey_ext_t(g, p.a, p.c, need_d(p, t));
    case Theorem::watson: return watson_t(g, p.a, p.b, p.c);
    case Theorem::watson_ext: return watson_ext_t(g, p.a, p.b, p.c, need_d(p, t));
  }
  throw DomainError("unknown theorem");
}

}  // namespace

SeriesSpec theorem_series(Theorem t, const TheoremParams& p) {
  const Rational one(1);
  const Rational& a = p.a;
  const Rational& b = p.b;
  const Rational& c = p.c;
  switch (t) {
    case Theorem::gauss: return SeriesSpec({a, b}, {c}, one);
    case Theorem::gauss_ext: {
      const Rational& d = need_d(p, t);
      return SeriesSpec({a, b, d + one}, {c + one, d}, one);
    }
    case Theorem::gauss_second: return SeriesSpec({a, b}, {kHalf * (a + b + one)}, kHalf);
    case Theorem::gauss_second_ext: {
      const Rational& d = need_d(p, t);
      return SeriesSpec({a, b, d + one}, {kHalf * (a + b + Rational(3)), d}, kHalf);
    }
    case Theorem::bailey: return SeriesSpec({a, one - a}, {c}, kHalf);
    case Theorem::bailey_ext: {
      const Rational& d = need_d(p, t);
      return SeriesSpec({a, one - a, d + one}, {c + one, d}, kHalf);
    }
    case Theorem::watson: return SeriesSpec({a, b, c}, {kHalf * (a + b + one), Rational(2) * c}, one);
    case Theorem::watson_ext: {
      const Rational& d = need_d(p, t);
      return SeriesSpec({a, b, c, d + one}, {kHalf * (a + b + one), Rational(2) * c + one, d}, one);
    }
  }
  throw DomainError("unknown theorem");
}

ExactValue gauss(const Rational& a, const Rational& b, const Rational& c) {
  return gauss_t(ExactAlgebra{}, a, b, c);
}
ExactValue gauss_ext(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return gauss_ext_t(ExactAlgebra{}, a, b, c, d);
}
ExactValue gauss_second(const Rational& a, const Rational& b) { return gauss_second_t(ExactAlgebra{}, a, b); }
ExactValue gauss_second_ext(const Rational& a, const Rational& b, const Rational& d) {
  return gauss_second_ext_t(ExactAlgebra{}, a, b, d);
}
ExactValue bailey(const Rational& a, const Rational& c) { return bailey_t(ExactAlgebra{}, a, c); }
ExactValue bailey_ext(const Rational& a, const Rational& c, const Rational& d) {
  return bailey_ext_t(ExactAlgebra{}, a, c, d);
}
ExactValue watson(const Rational& a, const Rational& b, const Rational& c) {
  return watson_t(ExactAlgebra{}, a, b, c);
}
ExactValue watson_ext(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return watson_ext_t(ExactAlgebra{}, a, b, c, d);
}

ExactValue evaluate(Theorem t, const TheoremParams& p) { return dispatch(ExactAlgebra{}, t, p); }

namespace numeric {

BigFloat evaluate(Theorem t, const TheoremParams& p, Bits precision) {
  return dispatch(NumericAlgebra{precision + kGuardBits}, t, p).rounded(precision);
}

BigFloat bailey_typeset(const Rational& a, const Rational& c, Bits precision) {
  const NumericAlgebra g{precision + kGuardBits};
  const Rational one(1);
  BigFloat v = g.sqrt_pi() * g.gamma(kHalf * c + kHalf) * g.rgamma(kHalf * (a + c)) *
               g.rgamma(kHalf * (c - a + one));
  return v.rounded(precision);
}

}  // namespace numeric

}  // namespace hypersum
