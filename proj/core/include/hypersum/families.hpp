#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hypersum/closed_forms.hpp"
#include "hypersum/exact_value.hpp"
#include "hypersum/series.hpp"

namespace hypersum {

/// The five parameterized pi-formula families plus hand-entered catalog identities.
enum class Family { T2_1, T2_2, T2_3, T2_4, T2_5, catalog };

std::string_view to_string(Family f) noexcept;
/// Accepts "T2.1" .. "T2.5" (and "2.1" .. "2.5").
std::optional<Family> parse_family(std::string_view name);

struct FamilyParams {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::uint32_t s = 0;
  std::optional<Rational> d;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// A series paired with its exact sum.
struct Identity {
  SeriesSpec lhs;
  ExactValue rhs;
  Family family = Family::catalog;
  FamilyParams params;
  std::string source;
};

/// Default cap on m, n, s; keeps the factorials and Pochhammer symbols manageable.
inline constexpr std::uint32_t kDefaultFamilyCap = 64;

/// 2F1(1/2+m, 1/2-m; 3/2+m; 1) = pi (3/2)_m / (2^(2m+1) m!).
Identity family_gauss(std::uint32_t m, std::uint32_t cap = kDefaultFamilyCap);

/// 3F2(1/2+m, 1/2-m, d+1; 5/2+m, d; 1) = (1 + (1-2m)/(2d)) 3 pi (5/2)_m / (2^(2m+3) m!).
Identity family_gauss_ext(std::uint32_t m, const Rational& d, std::uint32_t cap = kDefaultFamilyCap);

/// 3F2(1+2m, 1+2n, d+1; m+n+5/2, d; 1/2).
Identity family_gauss_second_ext(std::uint32_t m, std::uint32_t n, const Rational& d,
                                 std::uint32_t cap = kDefaultFamilyCap);

/// 3F2(1/2+m, 1/2-m, d+1; m+2n+5/2, d; 1/2).
Identity family_bailey_ext(std::uint32_t m, std::uint32_t n, const Rational& d,
                           std::uint32_t cap = kDefaultFamilyCap);

/// 4F3(1+2m, 1+2n, 1+m+n+s, d+1; m+n+3/2, 3+2m+2n+2s, d; 1).
Identity family_watson_ext(std::uint32_t m, std::uint32_t n, std::uint32_t s, const Rational& d,
                           std::uint32_t cap = kDefaultFamilyCap);

/// Dispatches on the family; d is required for every family except T2.1.
Identity generate(Family f, const FamilyParams& params, std::uint32_t cap = kDefaultFamilyCap);

/// The summation theorem and parameters a family specializes.
std::pair<Theorem, TheoremParams> family_theorem(Family f, const FamilyParams& params);

/// Right-hand side recomputed from the underlying summation theorem rather than the
/// family's own formula.
ExactValue closed_form_rhs(Family f, const FamilyParams& params);

}  // namespace hypersum
