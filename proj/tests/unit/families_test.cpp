#include <functional>
#include <vector>

#include <gtest/gtest.h>

#include "hypersum/closed_forms.hpp"
#include "hypersum/errors.hpp"
#include "hypersum/families.hpp"
#include "support.hpp"

namespace hypersum {
namespace {

using test::q;

const std::vector<Rational> kDs = {q(1, 2), q(1), q(3, 2), q(2), q(3), q(7, 2), q(5)};

ExactValue pi_times(const Rational& c) { return ExactValue::pi(c); }
ExactValue pi2_times(const Rational& c) { return ExactValue::monomial(c, 0, 4); }
ExactValue sqrt2_times(const Rational& c) { return ExactValue::sqrt2(c); }
ExactValue sqrt2_pi_times(const Rational& c) { return ExactValue::monomial(c, 1, 2); }

TEST(FamilyGauss, Examples) {
  EXPECT_EQ(family_gauss(0).rhs, pi_times(q(1, 2)));
  EXPECT_EQ(family_gauss(3).rhs, pi_times(q(35, 2048)));
  EXPECT_EQ(family_gauss(4).rhs, pi_times(q(315, 65536)));
  EXPECT_EQ(family_gauss(1).lhs.str(), "2F1(3/2,-1/2;5/2;1)");
}

TEST(FamilyGaussExt, Examples) {
  EXPECT_EQ(family_gauss_ext(0, q(3)).rhs, pi_times(q(7, 16)));
  EXPECT_EQ(family_gauss_ext(1, q(2)).rhs, pi_times(q(45, 256)));
  EXPECT_EQ(family_gauss_ext(2, q(4)).rhs, pi_times(q(525, 8192)));
  EXPECT_EQ(family_gauss_ext(0, q(1)).lhs.str(), "3F2(1/2,1/2,2;5/2,1;1)");
}

TEST(FamilyGaussSecondExt, Examples) {
  EXPECT_EQ(family_gauss_second_ext(0, 0, q(2)).rhs, ExactValue(q(3, 2)));
  EXPECT_EQ(family_gauss_second_ext(1, 1, q(7, 2)).rhs, pi_times(q(15, 8)));
  EXPECT_EQ(family_gauss_second_ext(2, 0, q(2)).rhs, ExactValue(q(7, 2)));
}

TEST(FamilyBaileyExt, Examples) {
  EXPECT_EQ(family_bailey_ext(0, 0, q(3, 2)).rhs, sqrt2_pi_times(q(1, 4)));
  EXPECT_EQ(family_bailey_ext(2, 0, q(7, 2)).rhs, sqrt2_pi_times(q(15, 128)));
  EXPECT_EQ(family_bailey_ext(3, 0, q(9, 2)).rhs, sqrt2_pi_times(q(35, 512)));
}

TEST(FamilyWatsonExt, Examples) {
  EXPECT_EQ(family_watson_ext(0, 0, 0, q(2)).rhs, pi2_times(q(1, 4)));
  EXPECT_EQ(family_watson_ext(1, 0, 0, q(5)).rhs, pi2_times(q(9, 16)) - ExactValue(q(3, 5)));
  EXPECT_EQ(family_watson_ext(2, 0, 0, q(7)).rhs, pi2_times(q(225, 256)) - ExactValue(q(5, 7)));
  EXPECT_EQ(family_watson_ext(0, 0, 0, q(3)).lhs.str(), "4F3(1,1,1,4;3/2,3,3;1)");
}

TEST(Families, ParameterValidation) {
  EXPECT_THROW(family_gauss_ext(0, q(0)), DomainError);
  EXPECT_THROW(family_bailey_ext(0, 0, q(-1, 2)), DomainError);
  EXPECT_THROW(family_gauss(kDefaultFamilyCap + 1), DomainError);
  EXPECT_THROW(generate(Family::T2_2, FamilyParams{1, 0, 0, std::nullopt}), DomainError);
  EXPECT_THROW(generate(Family::catalog, FamilyParams{}), DomainError);
  EXPECT_EQ(parse_family("T2.4"), Family::T2_4);
  EXPECT_EQ(parse_family("2.5"), Family::T2_5);
  EXPECT_FALSE(parse_family("T3.1").has_value());
}

// The family formulas and the substituted classical theorems are separate code paths.
TEST(Families, GeneratorMatchesSubstitutedTheorem) {
  for (std::uint32_t m = 0; m <= 6; ++m) {
    FamilyParams p{m, 0, 0, std::nullopt};
    EXPECT_EQ(generate(Family::T2_1, p).rhs, closed_form_rhs(Family::T2_1, p)) << m;
    for (const auto& d : kDs) {
      p.d = d;
      EXPECT_EQ(generate(Family::T2_2, p).rhs, closed_form_rhs(Family::T2_2, p)) << m << " d=" << d;
      for (std::uint32_t n = 0; n <= 6; ++n) {
        p.n = n;
        EXPECT_EQ(generate(Family::T2_3, p).rhs, closed_form_rhs(Family::T2_3, p)) << m << "," << n << " d=" << d;
        EXPECT_EQ(generate(Family::T2_4, p).rhs, closed_form_rhs(Family::T2_4, p)) << m << "," << n << " d=" << d;
        for (std::uint32_t s = 0; s <= 6; ++s) {
          p.s = s;
          EXPECT_EQ(generate(Family::T2_5, p).rhs, closed_form_rhs(Family::T2_5, p))
              << m << "," << n << "," << s << " d=" << d;
        }
        p.s = 0;
      }
      p.n = 0;
    }
  }
}

TEST(Families, LhsIsTheTheoremSeries) {
  for (std::uint32_t m = 0; m <= 4; ++m) {
    for (std::uint32_t n = 0; n <= 3; ++n) {
      for (const auto f : {Family::T2_3, Family::T2_4, Family::T2_5}) {
        const FamilyParams p{m, n, 1, q(5, 2)};
        const auto [t, tp] = family_theorem(f, p);
        EXPECT_EQ(generate(f, p).lhs, theorem_series(t, tp));
      }
    }
  }
}

struct Corollary {
  Family family;
  std::uint32_t m, n;
  std::function<ExactValue(const Rational&)> rhs;
};

// Corollary formulas in d, transcribed independently of the generators.
TEST(Families, CorollaryFormulasInD) {
  const auto one = [](const Rational& x) { return ExactValue(x); };
  const std::vector<Corollary> corollaries = {
      {Family::T2_2, 0, 0, [&](const Rational& d) { return pi_times(q(3, 8) * (q(1) + q(1) / (q(2) * d))); }},
      {Family::T2_2, 1, 0, [&](const Rational& d) { return pi_times(q(15, 64) * (q(1) - q(1) / (q(2) * d))); }},
      {Family::T2_2, 2, 0, [&](const Rational& d) { return pi_times(q(105, 1024) * (q(1) - q(3) / (q(2) * d))); }},
      {Family::T2_3, 0, 0,
       [&](const Rational& d) { return pi_times(q(3) * (q(1) / d - q(1, 2))) - one(q(3) * (q(3) / d - q(2))); }},
      {Family::T2_3, 1, 0,
       [&](const Rational& d) {
         return pi_times(q(15, 2) * (q(1, 2) - q(1) / d)) + one(q(5) * (q(5) / d - q(2)));
       }},
      {Family::T2_3, 1, 1,
       [&](const Rational& d) {
         return pi_times(q(105, 4) * (q(9) / d - q(5, 2))) - one(q(105) * (q(7) / d - q(2)));
       }},
      {Family::T2_3, 2, 0,
       [&](const Rational& d) {
         return pi_times(q(35, 8) * (q(1, 2) - q(1) / d)) + one(q(7, 3) * (q(7) / d - q(2)));
       }},
      {Family::T2_4, 0, 0,
       [&](const Rational& d) {
         return sqrt2_pi_times(q(3, 8) / d) + sqrt2_times(q(3, 4) * (q(1) - q(3) / (q(2) * d)));
       }},
      {Family::T2_4, 1, 0,
       [&](const Rational& d) {
         return sqrt2_pi_times(q(15, 32) / d) + sqrt2_times(q(5, 8) * (q(1) - q(5) / (q(2) * d)));
       }},
      {Family::T2_4, 2, 0,
       [&](const Rational& d) {
         return sqrt2_pi_times(q(105, 256) / d) + sqrt2_times(q(7, 16) * (q(1) - q(7) / (q(2) * d)));
       }},
      {Family::T2_4, 3, 0,
       [&](const Rational& d) {
         return sqrt2_pi_times(q(315, 1024) / d) + sqrt2_times(q(9, 32) * (q(1) - q(9) / (q(2) * d)));
       }},
      {Family::T2_5, 0, 0, [&](const Rational& d) { return pi2_times(q(1, 4)) + one(q(2) / d - q(1)); }},
      {Family::T2_5, 1, 0, [&](const Rational& d) { return pi2_times(q(9, 16)) + one(q(3) * (q(4) / d - q(1))); }},
      {Family::T2_5, 2, 0,
       [&](const Rational& d) { return pi2_times(q(225, 256)) + one(q(5) * (q(6) / d - q(1))); }},
  };
  for (const auto& c : corollaries) {
    for (const auto& d : kDs) {
      const FamilyParams p{c.m, c.n, 0, d};
      EXPECT_EQ(generate(c.family, p).rhs, c.rhs(d)) << to_string(c.family) << " m=" << c.m << " n=" << c.n
                                                     << " d=" << d;
    }
  }
}

// At the reduction point the extra parameter pair cancels and the classical theorem appears.
TEST(Families, ReductionPointCancelsToClassicalSeries) {
  for (std::uint32_t m = 0; m <= 4; ++m) {
    const Identity g = family_gauss_ext(m, q(3, 2) + q(long(m)));
    EXPECT_TRUE(same_series(g.lhs, family_gauss(m).lhs));
    EXPECT_EQ(g.rhs, family_gauss(m).rhs);
    for (std::uint32_t n = 0; n <= 3; ++n) {
      const Rational a = q(1 + 2 * long(m)), b = q(1 + 2 * long(n));
      const Identity second = family_gauss_second_ext(m, n, (a + b + q(1)) / q(2));
      EXPECT_TRUE(same_series(second.lhs, theorem_series(Theorem::gauss_second, {a, b, q(0), std::nullopt})));
      EXPECT_EQ(second.rhs, gauss_second(a, b));

      const Rational ba = q(1, 2) + q(long(m)), bc = q(3, 2) + q(long(m)) + q(2 * long(n));
      const Identity bailey_id = family_bailey_ext(m, n, bc);
      EXPECT_TRUE(same_series(bailey_id.lhs, theorem_series(Theorem::bailey, {ba, q(0), bc, std::nullopt})));
      EXPECT_EQ(bailey_id.rhs, bailey(ba, bc));

      for (std::uint32_t s = 0; s <= 2; ++s) {
        const Rational c = q(1 + long(m) + long(n) + long(s));
        const Identity w = family_watson_ext(m, n, s, q(2) * c);
        EXPECT_TRUE(same_series(w.lhs, theorem_series(Theorem::watson, {a, b, c, std::nullopt})));
        EXPECT_EQ(w.rhs, watson(a, b, c));
      }
    }
  }
}

}  // namespace
}  // namespace hypersum
