#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypersum/exact_value.hpp"
#include "hypersum/families.hpp"
#include "hypersum/series.hpp"

namespace hypersum {

enum class CatalogFlag : unsigned {
  none = 0,
  /// The printed parameters disagree with the family; the entry uses the family's.
  suspected_typo = 1u << 0,
  /// Printed as a 2F1 after silently cancelling the (d+1, d) pair against another parameter.
  reduces_to_2f1 = 1u << 1,
};

constexpr CatalogFlag operator|(CatalogFlag a, CatalogFlag b) {
  return static_cast<CatalogFlag>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
constexpr bool has_flag(CatalogFlag set, CatalogFlag f) {
  return (static_cast<unsigned>(set) & static_cast<unsigned>(f)) != 0;
}
std::vector<std::string> flag_names(CatalogFlag set);

struct CatalogEntry {
  std::string id;           // e.g. "2.2/m=0/d=1"
  Identity identity;        // generated by the family
  ExactValue expected;      // transcribed by hand from the printed result
  SeriesSpec typeset;       // the left-hand side exactly as printed
  CatalogFlag flags = CatalogFlag::none;
};

/// Every worked example of the five families, in the order they are printed.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry* find_catalog_entry(std::string_view id);

/// Canonical id: "2.k/m=M[/n=N][/s=S][/d=D]" with n and s omitted when zero.
std::string catalog_id(Family f, const FamilyParams& p);

}  // namespace hypersum
