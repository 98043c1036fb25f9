#include "hypersum/catalog.hpp"

#include <utility>

namespace hypersum {

std::vector<std::string> flag_names(CatalogFlag set) {
  std::vector<std::string> out;
  if (has_flag(set, CatalogFlag::suspected_typo)) out.emplace_back("suspected_typo");
  if (has_flag(set, CatalogFlag::reduces_to_2f1)) out.emplace_back("reduces_to_2f1");
  return out;
}

std::string catalog_id(Family f, const FamilyParams& p) {
  std::string id(to_string(f));
  if (!id.empty() && id[0] == 'T') id.erase(0, 1);
  id += "/m=" + std::to_string(p.m);
  if (p.n != 0) id += "/n=" + std::to_string(p.n);
  if (p.s != 0) id += "/s=" + std::to_string(p.s);
  if (p.d) id += "/d=" + p.d->str();
  return id;
}

namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }

ExactValue pi(long num, long den) { return ExactValue::pi(q(num, den)); }
ExactValue pi_sq(long num, long den) { return ExactValue::monomial(q(num, den), 0, 4); }
ExactValue sqrt2_pi(long num, long den) { return ExactValue::monomial(q(num, den), 1, 2); }

SeriesSpec printed(std::vector<Rational> num, std::vector<Rational> den, Rational z) {
  return SeriesSpec(std::move(num), std::move(den), std::move(z));
}

CatalogEntry entry(Family f, FamilyParams p, ExactValue expected, SeriesSpec typeset,
                   CatalogFlag flags = CatalogFlag::none) {
  Identity identity = generate(f, p);
  std::string id = catalog_id(f, p);
  return CatalogEntry{std::move(id), std::move(identity), std::move(expected), std::move(typeset), flags};
}

FamilyParams mp(std::uint32_t m, std::optional<Rational> d = std::nullopt, std::uint32_t n = 0) {
  return FamilyParams{m, n, 0, std::move(d)};
}

std::vector<CatalogEntry> build() {
  const Rational one(1);
  const Rational half(1, 2);
  const auto r2f1 = CatalogFlag::reduces_to_2f1;
  std::vector<CatalogEntry> c;

  // Gauss
  c.push_back(entry(Family::T2_1, mp(0), pi(1, 2), printed({q(1, 2), q(1, 2)}, {q(3, 2)}, one)));
  c.push_back(entry(Family::T2_1, mp(1), pi(3, 16), printed({q(3, 2), q(-1, 2)}, {q(5, 2)}, one)));
  c.push_back(entry(Family::T2_1, mp(2), pi(15, 256), printed({q(5, 2), q(-3, 2)}, {q(7, 2)}, one)));
  c.push_back(entry(Family::T2_1, mp(3), pi(35, 2048), printed({q(7, 2), q(-5, 2)}, {q(9, 2)}, one)));
  c.push_back(entry(Family::T2_1, mp(4), pi(315, 65536), printed({q(9, 2), q(-7, 2)}, {q(11, 2)}, one)));

  // extension of Gauss
  c.push_back(entry(Family::T2_2, mp(0, q(1)), pi(9, 16), printed({q(1, 2), q(1, 2), q(2)}, {q(5, 2), q(1)}, one)));
  c.push_back(entry(Family::T2_2, mp(0, q(2)), pi(15, 32), printed({q(1, 2), q(1, 2), q(3)}, {q(5, 2), q(2)}, one)));
  c.push_back(entry(Family::T2_2, mp(0, q(3)), pi(7, 16), printed({q(1, 2), q(1, 2), q(4)}, {q(5, 2), q(3)}, one)));
  c.push_back(entry(Family::T2_2, mp(1, q(1)), pi(15, 128), printed({q(3, 2), q(-1, 2), q(2)}, {q(7, 2), q(1)}, one)));
  c.push_back(entry(Family::T2_2, mp(1, q(2)), pi(45, 256), printed({q(3, 2), q(-1, 2), q(3)}, {q(7, 2), q(2)}, one)));
  // printed with lower parameter 9/2; the m = 1 family has 7/2
  c.push_back(entry(Family::T2_2, mp(1, q(3)), pi(75, 384), printed({q(3, 2), q(-1, 2), q(4)}, {q(9, 2), q(3)}, one),
                    CatalogFlag::suspected_typo));
  c.push_back(entry(Family::T2_2, mp(2, q(2)), pi(105, 4096), printed({q(5, 2), q(-3, 2), q(3)}, {q(9, 2), q(2)}, one)));
  c.push_back(entry(Family::T2_2, mp(2, q(3)), pi(105, 2048), printed({q(5, 2), q(-3, 2), q(4)}, {q(9, 2), q(3)}, one)));
  c.push_back(entry(Family::T2_2, mp(2, q(4)), pi(525, 8192), printed({q(5, 2), q(-3, 2), q(5)}, {q(9, 2), q(4)}, one)));

  // extension of Gauss second
  c.push_back(entry(Family::T2_3, mp(0, q(2)), ExactValue(q(3, 2)), printed({q(1), q(1), q(3)}, {q(5, 2), q(2)}, half)));
  c.push_back(entry(Family::T2_3, mp(0, q(3, 2)), pi(1, 2), printed({q(1), q(1)}, {q(3, 2)}, half), r2f1));
  c.push_back(entry(Family::T2_3, mp(1, q(2)), ExactValue(q(5, 2)), printed({q(3), q(1), q(3)}, {q(7, 2), q(2)}, half)));
  c.push_back(entry(Family::T2_3, mp(1, q(5, 2)), pi(3, 4), printed({q(3), q(1)}, {q(5, 2)}, half), r2f1));
  c.push_back(entry(Family::T2_3, mp(1, q(7, 2), 1), pi(15, 8), printed({q(3), q(3)}, {q(7, 2)}, half), r2f1));
  c.push_back(entry(Family::T2_3, mp(2, q(2)), ExactValue(q(7, 2)), printed({q(5), q(1), q(3)}, {q(9, 2), q(2)}, half)));
  c.push_back(entry(Family::T2_3, mp(2, q(7, 2)), pi(15, 16), printed({q(5), q(1)}, {q(7, 2)}, half), r2f1));

  // extension of Bailey
  c.push_back(entry(Family::T2_4, mp(0, q(3, 2)), sqrt2_pi(1, 4), printed({q(1, 2), q(1, 2)}, {q(3, 2)}, half), r2f1));
  c.push_back(entry(Family::T2_4, mp(1, q(5, 2)), sqrt2_pi(3, 16), printed({q(3, 2), q(-1, 2)}, {q(5, 2)}, half), r2f1));
  c.push_back(entry(Family::T2_4, mp(2, q(7, 2)), sqrt2_pi(15, 128), printed({q(5, 2), q(-3, 2)}, {q(7, 2)}, half), r2f1));
  c.push_back(entry(Family::T2_4, mp(3, q(9, 2)), sqrt2_pi(35, 512), printed({q(7, 2), q(-5, 2)}, {q(9, 2)}, half), r2f1));

  // extension of Watson
  c.push_back(entry(Family::T2_5, mp(0, q(1)), pi_sq(1, 4) + q(1), printed({q(1), q(1), q(2)}, {q(3, 2), q(3)}, one)));
  c.push_back(entry(Family::T2_5, mp(0, q(2)), pi_sq(1, 4), printed({q(1), q(1), q(1)}, {q(3, 2), q(2)}, one)));
  c.push_back(entry(Family::T2_5, mp(0, q(3)), pi_sq(1, 4) - q(1, 3),
                    printed({q(1), q(1), q(1), q(4)}, {q(3, 2), q(3), q(3)}, one)));
  c.push_back(entry(Family::T2_5, mp(1, q(1)), pi_sq(9, 16) + q(9), printed({q(3), q(2), q(2)}, {q(5, 2), q(5)}, one)));
  c.push_back(entry(Family::T2_5, mp(1, q(2)), pi_sq(9, 16) + q(3), printed({q(3), q(1), q(3)}, {q(5, 2), q(5)}, one)));
  c.push_back(entry(Family::T2_5, mp(1, q(3)), pi_sq(9, 16) + q(1), printed({q(1), q(2), q(4)}, {q(5, 2), q(5)}, one)));
  c.push_back(entry(Family::T2_5, mp(1, q(4)), pi_sq(9, 16), printed({q(3), q(1), q(2)}, {q(5, 2), q(4)}, one)));
  c.push_back(entry(Family::T2_5, mp(1, q(5)), pi_sq(9, 16) - q(3, 5),
                    printed({q(3), q(1), q(2), q(6)}, {q(5, 2), q(5), q(5)}, one)));
  c.push_back(entry(Family::T2_5, mp(2, q(1)), pi_sq(225, 256) + q(25), printed({q(5), q(3), q(2)}, {q(7, 2), q(7)}, one)));
  c.push_back(entry(Family::T2_5, mp(2, q(2)), pi_sq(225, 256) + q(10),
                    printed({q(5), q(1), q(3), q(3)}, {q(7, 2), q(7), q(2)}, one)));
  c.push_back(entry(Family::T2_5, mp(2, q(3)), pi_sq(225, 256) + q(5), printed({q(5), q(1), q(4)}, {q(7, 2), q(7)}, one)));
  c.push_back(entry(Family::T2_5, mp(2, q(4)), pi_sq(225, 256) + q(5, 2),
                    printed({q(5), q(1), q(3), q(5)}, {q(7, 2), q(7), q(4)}, one)));
  c.push_back(entry(Family::T2_5, mp(2, q(5)), pi_sq(225, 256) + q(1), printed({q(1), q(3), q(6)}, {q(7, 2), q(7)}, one)));
  c.push_back(entry(Family::T2_5, mp(2, q(6)), pi_sq(225, 256), printed({q(5), q(1), q(3)}, {q(7, 2), q(6)}, one)));
  c.push_back(entry(Family::T2_5, mp(2, q(7)), pi_sq(225, 256) - q(5, 7),
                    printed({q(5), q(1), q(3), q(8)}, {q(7, 2), q(7), q(7)}, one)));
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

}  // namespace hypersum
