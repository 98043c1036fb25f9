#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypersum/rational.hpp"

namespace hypersum {

/// pFq(numerator; denominator; z) with rational parameters.
///
/// Construction validates the parameter lists: a denominator parameter may be zero
/// or a negative integer only when a numerator parameter terminates the series no
/// later than that denominator would vanish, and p <= q + 1 unless the series terminates.
class SeriesSpec {
public:
  SeriesSpec(std::vector<Rational> numerator, std::vector<Rational> denominator, Rational argument);

  const std::vector<Rational>& numerator() const noexcept { return num_; }
  const std::vector<Rational>& denominator() const noexcept { return den_; }
  const Rational& argument() const noexcept { return z_; }
  std::size_t p() const noexcept { return num_.size(); }
  std::size_t q() const noexcept { return den_.size(); }

  /// Sum of denominator parameters minus sum of numerator parameters.
  Rational omega() const;

  /// Index of the last non-zero term when some numerator parameter is a non-positive integer.
  std::optional<std::uint64_t> last_term_index() const;

  /// Compact form, e.g. "3F2(1/2,1/2,2;5/2,1;1)".
  std::string str() const;

  /// Parses the str() form.
  static SeriesSpec parse(std::string_view text);

  friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;

private:
  std::vector<Rational> num_;
  std::vector<Rational> den_;
  Rational z_;
};

/// Removes numerator/denominator pairs with equal values (as multisets). Pairs whose
/// value is a non-positive integer are kept because they govern termination.
SeriesSpec cancel_common_parameters(const SeriesSpec& spec);

/// Same series up to parameter order and cancellation of equal pairs.
bool same_series(const SeriesSpec& a, const SeriesSpec& b);

enum class ConvergenceClass { terminating, geometric, unity_convergent, divergent };

std::string_view to_string(ConvergenceClass c) noexcept;

/// terminating: a numerator parameter is a non-positive integer.
/// geometric: p <= q, or p == q + 1 with |z| < 1.
/// unity_convergent: p == q + 1, z == 1 and omega > 0.
/// divergent: everything else (including the conditionally convergent strip at z = 1).
ConvergenceClass convergence_class(const SeriesSpec& spec);

}  // namespace hypersum
