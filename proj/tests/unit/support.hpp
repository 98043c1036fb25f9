#pragma once

#include <string>

#include "hypersum/bigfloat.hpp"
#include "hypersum/rational.hpp"

namespace hypersum::test {

inline Rational q(long num, long den = 1) { return Rational(num, den); }

inline BigFloat rel_error(const BigFloat& got, const BigFloat& want) {
  BigFloat diff = abs(got - want);
  return want.is_zero() ? diff : diff / abs(want);
}

/// true when |got - want| <= 2^-bits * |want|
inline bool agrees_to_bits(const BigFloat& got, const BigFloat& want, long bits) {
  return rel_error(got, want) <= BigFloat::exp2(-bits, 64);
}

inline BigFloat dec(const std::string& text, Bits precision) { return BigFloat::parse(text, precision); }

}  // namespace hypersum::test
