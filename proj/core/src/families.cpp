#include "hypersum/families.hpp"

#include "hypersum/errors.hpp"
#include "hypersum/exact_gamma.hpp"

namespace hypersum {

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::T2_1: return "T2.1";
    case Family::T2_2: return "T2.2";
    case Family::T2_3: return "T2.3";
    case Family::T2_4: return "T2.4";
    case Family::T2_5: return "T2.5";
    case Family::catalog: return "catalog";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  if (!name.empty() && (name[0] == 'T' || name[0] == 't')) name.remove_prefix(1);
  if (name == "2.1") return Family::T2_1;
  if (name == "2.2") return Family::T2_2;
  if (name == "2.3") return Family::T2_3;
  if (name == "2.4") return Family::T2_4;
  if (name == "2.5") return Family::T2_5;
  return std::nullopt;
}

namespace {

const Rational kHalf(1, 2);
const Rational kThreeHalves(3, 2);
const Rational kFiveHalves(5, 2);

void check_cap(std::uint32_t value, std::uint32_t cap, const char* name) {
  if (value > cap) {
    throw DomainError(std::string("family parameter ") + name + " = " + std::to_string(value) +
                      " exceeds the cap " + std::to_string(cap));
  }
}

void check_d(const Rational& d) {
  if (d.sign() <= 0) throw DomainError("family requires d > 0, got d = " + d.str());
}

Rational fact(std::uint64_t n) { return Rational(factorial(n)); }
Rational poch(const Rational& x, std::uint64_t n) { return pochhammer(x, n); }
Rational r(std::uint64_t n) { return Rational(static_cast<long>(n)); }

ExactValue inv_pi() { return ExactValue::monomial(Rational(1), 0, -2); }

std::string source_for(Family f, const FamilyParams& p) {
  std::string s = std::string(to_string(f)) + " m=" + std::to_string(p.m);
  if (f == Family::T2_3 || f == Family::T2_4 || f == Family::T2_5) s += " n=" + std::to_string(p.n);
  if (f == Family::T2_5) s += " s=" + std::to_string(p.s);
  if (p.d) s += " d=" + p.d->str();
  return s;
}

Identity make(Family f, FamilyParams p, SeriesSpec lhs, ExactValue rhs) {
  std::string source = source_for(f, p);
  return Identity{std::move(lhs), std::move(rhs), f, std::move(p), std::move(source)};
}

}  // namespace

Identity family_gauss(std::uint32_t m, std::uint32_t cap) {
  check_cap(m, cap, "m");
  const Rational mm = r(m);
  SeriesSpec lhs({kHalf + mm, kHalf - mm}, {kThreeHalves + mm}, Rational(1));
  ExactValue rhs = ExactValue::pi(poch(kThreeHalves, m) / (pow(Rational(2), 2 * m + 1) * fact(m)));
  return make(Family::T2_1, FamilyParams{m, 0, 0, std::nullopt}, std::move(lhs), std::move(rhs));
}

Identity family_gauss_ext(std::uint32_t m, const Rational& d, std::uint32_t cap) {
  check_cap(m, cap, "m");
  check_d(d);
  const Rational mm = r(m);
  const Rational one(1);
  SeriesSpec lhs({kHalf + mm, kHalf - mm, d + one}, {kFiveHalves + mm, d}, one);
  const Rational bracket = one + (one - Rational(2) * mm) / (Rational(2) * d);
  ExactValue rhs = ExactValue::pi(bracket * Rational(3) * poch(kFiveHalves, m) /
                                  (pow(Rational(2), 2 * m + 3) * fact(m)));
  return make(Family::T2_2, FamilyParams{m, 0, 0, d}, std::move(lhs), std::move(rhs));
}

Identity family_gauss_second_ext(std::uint32_t m, std::uint32_t n, const Rational& d, std::uint32_t cap) {
  check_cap(m, cap, "m");
  check_cap(n, cap, "n");
  check_d(d);
  const Rational mm = r(m);
  const Rational nn = r(n);
  const Rational one(1);
  const Rational two(2);
  SeriesSpec lhs({one + two * mm, one + two * nn, d + one}, {mm + nn + kFiveHalves, d}, kHalf);

  const Rational prefactor = two * poch(kThreeHalves, m + n + 1) /
                             ((two * mm - two * nn + one) * (two * mm - two * nn - one));
  const Rational first = (mm + nn + kHalf - (two * mm + one) * (two * nn + one) / d) / (fact(m) * fact(n));
  const Rational second = ((two * mm + two * nn + Rational(3)) / d - two) / (poch(kHalf, m) * poch(kHalf, n));
  // 2 pi (3/2)_{m+n+1} / ((2m-2n+1)(2m-2n-1)) [first + second / pi]
  ExactValue rhs = ExactValue::pi(prefactor) * (ExactValue(first) + inv_pi() * ExactValue(second));
  return make(Family::T2_3, FamilyParams{m, n, 0, d}, std::move(lhs), std::move(rhs));
}

Identity family_bailey_ext(std::uint32_t m, std::uint32_t n, const Rational& d, std::uint32_t cap) {
  check_cap(m, cap, "m");
  check_cap(n, cap, "n");
  check_d(d);
  const Rational mm = r(m);
  const Rational nn = r(n);
  const Rational one(1);
  const Rational two(2);
  SeriesSpec lhs({kHalf + mm, kHalf - mm, d + one}, {mm + two * nn + kFiveHalves, d}, kHalf);

  // pi / 2^(m+2n+5/2) (3/2)_{m+2n+1}
  ExactValue prefactor = ExactValue::pi(poch(kThreeHalves, m + 2 * n + 1)) *
                         two_power(HalfInteger(BigInt(-2 * static_cast<long>(m + 2 * n) - 5)));
  const Rational first = (two / d) / (fact(m + n) * fact(n));
  const Rational second = (one - (kThreeHalves + mm + two * nn) / d) /
                          (poch(kHalf, m + n + 1) * poch(kHalf, n + 1));
  ExactValue rhs = prefactor * (ExactValue(first) + inv_pi() * ExactValue(second));
  return make(Family::T2_4, FamilyParams{m, n, 0, d}, std::move(lhs), std::move(rhs));
}

Identity family_watson_ext(std::uint32_t m, std::uint32_t n, std::uint32_t s, const Rational& d,
                           std::uint32_t cap) {
  check_cap(m, cap, "m");
  check_cap(n, cap, "n");
  check_cap(s, cap, "s");
  check_d(d);
  const Rational mm = r(m);
  const Rational nn = r(n);
  const Rational ss = r(s);
  const Rational one(1);
  const Rational two(2);
  SeriesSpec lhs({one + two * mm, one + two * nn, one + mm + nn + ss, d + one},
                 {mm + nn + kThreeHalves, Rational(3) + two * (mm + nn + ss), d}, one);

  const Rational prefactor = Rational(1, 4) * poch(kThreeHalves, m + n + s) * poch(kThreeHalves, m + n) *
                             poch(kHalf, s) / (poch(kHalf, m) * poch(kHalf, n) * fact(m) * fact(n));
  const Rational first = poch(kHalf, m) * poch(kHalf, n) / (fact(m + s) * fact(n + s));
  const Rational second = ((two + two * (mm + nn + ss)) / d - one) * fact(m) * fact(n) /
                          (poch(kHalf, m + s + 1) * poch(kHalf, n + s + 1));
  // (pi/4) P [pi first + second / pi]
  ExactValue rhs = ExactValue::pi(prefactor) * (ExactValue::pi(first) + inv_pi() * ExactValue(second));
  return make(Family::T2_5, FamilyParams{m, n, s, d}, std::move(lhs), std::move(rhs));
}

namespace {

const Rational& need_d(const FamilyParams& p, Family f) {
  if (!p.d) throw DomainError(std::string(to_string(f)) + " requires the parameter d");
  return *p.d;
}

}  // namespace

Identity generate(Family f, const FamilyParams& p, std::uint32_t cap) {
  switch (f) {
    case Family::T2_1: return family_gauss(p.m, cap);
    case Family::T2_2: return family_gauss_ext(p.m, need_d(p, f), cap);
    case Family::T2_3: return family_gauss_second_ext(p.m, p.n, need_d(p, f), cap);
    case Family::T2_4: return family_bailey_ext(p.m, p.n, need_d(p, f), cap);
    case Family::T2_5: return family_watson_ext(p.m, p.n, p.s, need_d(p, f), cap);
    case Family::catalog: break;
  }
  throw DomainError("catalog identities are not generated by a family");
}

std::pair<Theorem, TheoremParams> family_theorem(Family f, const FamilyParams& p) {
  const Rational m = r(p.m);
  const Rational n = r(p.n);
  const Rational s = r(p.s);
  const Rational one(1);
  const Rational two(2);
  switch (f) {
    case Family::T2_1:
      return {Theorem::gauss, TheoremParams{kHalf + m, kHalf - m, kThreeHalves + m, std::nullopt}};
    case Family::T2_2:
      return {Theorem::gauss_ext, TheoremParams{kHalf + m, kHalf - m, kThreeHalves + m, need_d(p, f)}};
    case Family::T2_3:
      return {Theorem::gauss_second_ext, TheoremParams{one + two * m, one + two * n, Rational(0), need_d(p, f)}};
    case Family::T2_4:
      return {Theorem::bailey_ext, TheoremParams{kHalf + m, Rational(0), kThreeHalves + m + two * n, need_d(p, f)}};
    case Family::T2_5:
      return {Theorem::watson_ext,
              TheoremParams{one + two * m, one + two * n, one + m + n + s, need_d(p, f)}};
    case Family::catalog: break;
  }
  throw DomainError("catalog identities have no underlying theorem");
}

ExactValue closed_form_rhs(Family f, const FamilyParams& params) {
  const auto [theorem, tp] = family_theorem(f, params);
  return evaluate(theorem, tp);
}

}  // namespace hypersum
