#pragma once

#include "hypersum/bigfloat.hpp"

namespace hypersum {

/// Gamma(x) by Spouge's approximation with its parameter chosen from the target
/// precision, giving relative error <= 2^-(precision - 8). Arguments below 1 are
/// shifted up with Gamma(x) = Gamma(x + n) / (x (x+1) ... (x+n-1)).
///
/// Throws PoleError when x lies within half an ulp of a non-positive integer.
BigFloat num_gamma(const BigFloat& x, Bits precision);

/// Spouge parameter used for a target precision.
long spouge_parameter(Bits precision);

}  // namespace hypersum
