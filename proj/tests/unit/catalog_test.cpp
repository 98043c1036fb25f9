#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "hypersum/catalog.hpp"
#include "hypersum/errors.hpp"
#include "support.hpp"

namespace hypersum {
namespace {

using test::q;

std::vector<std::pair<std::string, std::string>> manifest() {
  std::ifstream in(std::string(HYPERSUM_TEST_DATA_DIR) + "/catalog_manifest.tsv");
  std::vector<std::pair<std::string, std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    rows.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return rows;
}

TEST(Catalog, MatchesManifestInOrder) {
  const auto rows = manifest();
  ASSERT_EQ(rows.size(), 40u);
  ASSERT_EQ(catalog().size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(catalog()[i].id, rows[i].first);
    EXPECT_EQ(catalog()[i].expected.str(), rows[i].second) << rows[i].first;
  }
}

TEST(Catalog, IdsAreUniqueAndConsistent) {
  std::set<std::string> ids;
  for (const auto& e : catalog()) {
    EXPECT_TRUE(ids.insert(e.id).second) << e.id;
    EXPECT_EQ(catalog_id(e.identity.family, e.identity.params), e.id);
    EXPECT_EQ(find_catalog_entry(e.id), &e);
  }
  EXPECT_EQ(find_catalog_entry("2.9/m=0"), nullptr);
}

TEST(Catalog, GeneratedRhsEqualsTranscription) {
  for (const auto& e : catalog()) {
    EXPECT_EQ(e.identity.rhs, e.expected) << e.id;
    EXPECT_EQ(generate(e.identity.family, e.identity.params).rhs, e.expected) << e.id;
  }
}

TEST(Catalog, Examples) {
  EXPECT_EQ(find_catalog_entry("2.1/m=1")->expected, ExactValue::pi(q(3, 16)));
  EXPECT_EQ(find_catalog_entry("2.5/m=2/d=6")->expected, ExactValue::monomial(q(225, 256), 0, 4));
  const CatalogEntry* typo = find_catalog_entry("2.2/m=1/d=3");
  ASSERT_NE(typo, nullptr);
  EXPECT_EQ(typo->expected, ExactValue::pi(q(75, 384)));
  EXPECT_EQ(typo->flags, CatalogFlag::suspected_typo);
  EXPECT_EQ(flag_names(typo->flags), std::vector<std::string>{"suspected_typo"});
}

TEST(Catalog, PrintedSeriesAgreeWithGeneratedOnesUpToCancellation) {
  for (const auto& e : catalog()) {
    const bool same = same_series(e.typeset, e.identity.lhs);
    if (has_flag(e.flags, CatalogFlag::suspected_typo)) {
      EXPECT_FALSE(same) << e.id;
      EXPECT_EQ(e.typeset.str(), "3F2(3/2,-1/2,4;9/2,3;1)");
      EXPECT_EQ(e.identity.lhs.str(), "3F2(3/2,-1/2,4;7/2,3;1)");
    } else {
      EXPECT_TRUE(same) << e.id << ": " << e.typeset.str() << " vs " << e.identity.lhs.str();
    }
    if (has_flag(e.flags, CatalogFlag::reduces_to_2f1)) {
      EXPECT_EQ(cancel_common_parameters(e.identity.lhs).p(), 2u) << e.id;
    }
  }
}

TEST(Catalog, FamilySizes) {
  std::map<Family, int> count;
  for (const auto& e : catalog()) ++count[e.identity.family];
  EXPECT_EQ(count[Family::T2_1], 5);
  EXPECT_EQ(count[Family::T2_2], 9);
  EXPECT_EQ(count[Family::T2_3], 7);
  EXPECT_EQ(count[Family::T2_4], 4);
  EXPECT_EQ(count[Family::T2_5], 15);
}

}  // namespace
}  // namespace hypersum
