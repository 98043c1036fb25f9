#include "hypersum/numeric_gamma.hpp"

#include <cmath>

#include "hypersum/errors.hpp"

namespace hypersum {

long spouge_parameter(Bits precision) {
  // relative error < a^-1/2 (2 pi)^-(a + 1/2)
  const double bits = static_cast<double>(precision) + 8.0;
  return static_cast<long>(std::ceil(bits * std::log(2.0) / std::log(2.0 * M_PI))) + 2;
}

namespace {

void check_pole(const BigFloat& x, Bits precision) {
  if (x.sign() > 0) return;
  const BigInt n = x.round_to_integer();
  if (sgn(n) > 0) return;
  BigFloat gap = abs(x - BigFloat(n, x.precision()));
  // half an ulp of the nearest integer, with 1 as the scale near zero
  const long scale = n == 0 ? 1 : static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
  if (gap.is_zero() || gap <= BigFloat::exp2(scale - static_cast<long>(precision) - 1, 64)) {
    throw PoleError("gamma has a pole at " + n.get_str());
  }
}

// Gamma(z + 1) for z >= 0.
BigFloat spouge(const BigFloat& z, long a, Bits wp) {
  const BigFloat two_pi = ldexp(BigFloat::pi(wp), 1);
  BigFloat sum = sqrt(two_pi);
  BigFloat fact(1, wp);  // (k-1)!
  for (long k = 1; k < a; ++k) {
    if (k > 1) fact *= Rational(k - 1);
    const BigFloat ak(a - k, wp);
    // c_k = (-1)^(k-1) / (k-1)! * (a-k)^(k-1/2) * e^(a-k)
    BigFloat ck = pow(ak, BigFloat(Rational(2 * k - 1, 2), wp)) * exp(ak) / fact;
    if (k % 2 == 0) ck = -ck;
    BigFloat zk = z.rounded(wp) + BigFloat(k, wp);
    sum += ck / zk;
  }
  BigFloat za = z.rounded(wp) + BigFloat(a, wp);
  BigFloat half(Rational(1, 2), wp);
  return pow(za, z.rounded(wp) + half) * exp(-za) * sum;
}

}  // namespace

BigFloat num_gamma(const BigFloat& x, Bits precision) {
  check_pole(x, precision);
  if (x < BigFloat(-100000, 64)) throw DomainError("gamma argument below -100000 is not supported");
  const long a = spouge_parameter(precision);
  // The alternating coefficient sum loses about as many bits as the target precision.
  const Bits wp = 2 * precision + 64;
  BigFloat y = x.rounded(wp);
  BigFloat shift_product(1, wp);
  while (y < BigFloat(1, wp)) {
    shift_product *= y;
    y += BigFloat(1, wp);
  }
  BigFloat g = spouge(y - BigFloat(1, wp), a, wp);
  g /= shift_product;
  return g.rounded(precision);
}

}  // namespace hypersum
