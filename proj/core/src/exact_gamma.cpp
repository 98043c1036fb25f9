#include "hypersum/exact_gamma.hpp"

#include "hypersum/errors.hpp"

namespace hypersum {

Rational pochhammer(const Rational& lambda, std::uint64_t n) {
  mpq_class acc(1);
  mpq_class factor = lambda.get();
  for (std::uint64_t k = 0; k < n; ++k) {
    acc *= factor;
    factor += 1;
  }
  return Rational(std::move(acc));
}

BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

namespace {

void check_size(const BigInt& twice) {
  if (abs(twice) > 2 * kMaxExactGammaArgument) {
    throw DomainError("gamma argument " + HalfInteger(twice).to_rational().str() +
                      " exceeds the exact-evaluation limit");
  }
}

}  // namespace

ExactValue exact_gamma(const HalfInteger& x) {
  const BigInt& twice = x.twice_value();
  check_size(twice);
  if (x.is_integer()) {
    if (sgn(twice) <= 0) throw PoleError("gamma has a pole at " + x.to_rational().str());
    const long k = static_cast<long>(BigInt(twice / 2).get_si());
    return ExactValue(Rational(factorial(static_cast<std::uint64_t>(k - 1))));
  }
  // x = 1/2 + k
  const long k = static_cast<long>(BigInt((twice - 1) / 2).get_si());
  const Rational half(1, 2);
  if (k >= 0) return ExactValue::sqrt_pi(pochhammer(half, static_cast<std::uint64_t>(k)));
  // Gamma(1/2) = (x)_{-k} Gamma(x)
  return ExactValue::sqrt_pi(Rational(1) / pochhammer(x.to_rational(), static_cast<std::uint64_t>(-k)));
}

ExactValue exact_gamma(const Rational& x) { return exact_gamma(HalfInteger::from(x)); }

ExactValue two_power(const HalfInteger& e) {
  const BigInt& twice = e.twice_value();
  if (!twice.fits_slong_p()) throw DomainError("power of two exponent out of range");
  const long t = twice.get_si();
  if (t % 2 == 0) return ExactValue(pow(Rational(2), t / 2));
  // floor((t-1)/2) for odd t is exact division
  return ExactValue::sqrt2(pow(Rational(2), (t - 1) / 2));
}

ExactValue two_power(const Rational& e) { return two_power(HalfInteger::from(e)); }

}  // namespace hypersum
