#include <random>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "hypersum/errors.hpp"
#include "hypersum/exact_value.hpp"
#include "support.hpp"

namespace hypersum {
namespace {

using test::q;

ExactValue random_value(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  std::uniform_int_distribution<int> s(0, 1);
  std::uniform_int_distribution<long> h(-3, 4);
  ExactValue v;
  for (int i = 0; i < 3; ++i) v += ExactValue::monomial(q(coeff(rng), den(rng)), s(rng), h(rng));
  return v;
}

TEST(ExactValue, Examples) {
  const ExactValue pi2_4 = ExactValue::monomial(q(1, 4), 0, 4);
  EXPECT_EQ(ev_arith(ArithKind::add, pi2_4, ExactValue(1)).str(), "pi^2/4 + 1");
  EXPECT_EQ(ev_arith(ArithKind::mul, ExactValue::sqrt2(), ExactValue::sqrt2()), ExactValue(2));
  EXPECT_EQ(ev_arith(ArithKind::div, ExactValue::pi(q(3)), ExactValue::sqrt_pi(q(2))), ExactValue::sqrt_pi(q(3, 2)));
}

TEST(ExactValue, Rendering) {
  EXPECT_EQ(ExactValue().str(), "0");
  EXPECT_EQ(ExactValue(q(-3, 2)).str(), "-3/2");
  EXPECT_EQ(ExactValue::pi(q(1, 2)).str(), "pi/2");
  EXPECT_EQ(ExactValue::monomial(q(35, 512), 1, 2).str(), "35*sqrt2*pi/512");
  EXPECT_EQ((ExactValue::monomial(q(225, 256), 0, 4) - ExactValue(q(5, 7))).str(), "225*pi^2/256 - 5/7");
  EXPECT_EQ(ExactValue::monomial(q(4, 3), 0, 1).str(), "4*sqrt(pi)/3");
  EXPECT_EQ(ExactValue::monomial(q(-1), 0, 3).str(), "-sqrt(pi)*pi");
}

TEST(ExactValue, MonomialFoldsSquaredRoots) {
  EXPECT_EQ(ExactValue::monomial(q(1), 2, 0), ExactValue(2));
  EXPECT_EQ(ExactValue::monomial(q(1), 3, 0), ExactValue::sqrt2(q(2)));
  EXPECT_TRUE(ExactValue::monomial(q(0), 1, 2).is_zero());
}

TEST(ExactValue, CancellationRemovesTerms) {
  ExactValue x = ExactValue::pi(q(3)) + ExactValue(1);
  x -= ExactValue::pi(q(3));
  EXPECT_EQ(x, ExactValue(1));
  EXPECT_TRUE(x.is_monomial());
}

TEST(ExactValue, DivisionByNonMonomialFails) {
  EXPECT_THROW(ExactValue(1) / (ExactValue::pi() + ExactValue(1)), NonInvertibleError);
  EXPECT_THROW(ExactValue(1) / ExactValue(), NonInvertibleError);
}

TEST(ExactValue, RingLaws) {
  std::mt19937_64 rng(20240531);
  for (int i = 0; i < 200; ++i) {
    const ExactValue a = random_value(rng), b = random_value(rng), c = random_value(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, ExactValue());
  }
}

TEST(ExactValue, DivideThenMultiply) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coeff(1, 30);
  std::uniform_int_distribution<long> h(-4, 4);
  std::uniform_int_distribution<int> s(0, 1);
  for (int i = 0; i < 200; ++i) {
    const ExactValue x = random_value(rng);
    const ExactValue m = ExactValue::monomial(q(coeff(rng), coeff(rng)), s(rng), h(rng));
    EXPECT_EQ((x / m) * m, x);
  }
}

TEST(ExactValue, JsonRoundTrip) {
  const ExactValue v = ExactValue::monomial(q(9, 16), 0, 4) + ExactValue(q(-3, 5)) + ExactValue::sqrt2(q(1, 4));
  const nlohmann::json j = to_json(v);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["coeff"], "-3/5");
  EXPECT_EQ(j[0]["sqrtpi_pow"], 0);
  EXPECT_EQ(j[0]["sqrt2"], 0);
  EXPECT_EQ(j[1]["sqrt2"], 1);
  EXPECT_EQ(j[2]["coeff"], "9/16");
  EXPECT_EQ(j[2]["sqrtpi_pow"], 4);
  EXPECT_EQ(exact_value_from_json(j), v);
  EXPECT_THROW(exact_value_from_json(nlohmann::json::object()), ParseError);
}

}  // namespace
}  // namespace hypersum
