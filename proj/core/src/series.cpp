#include "hypersum/series.hpp"

#include <algorithm>

#include "hypersum/errors.hpp"

namespace hypersum {

namespace {

std::optional<std::uint64_t> termination_index(const std::vector<Rational>& num) {
  std::optional<std::uint64_t> n;
  for (const auto& a : num) {
    if (!a.is_nonpositive_integer()) continue;
    const auto k = static_cast<std::uint64_t>(-a.to_int64());
    if (!n || k < *n) n = k;
  }
  return n;
}

std::string join(const std::vector<Rational>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += xs[i].str();
  }
  return out;
}

std::vector<Rational> parse_list(std::string_view text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(Rational::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

SeriesSpec::SeriesSpec(std::vector<Rational> numerator, std::vector<Rational> denominator,
                       Rational argument)
    : num_(std::move(numerator)), den_(std::move(denominator)), z_(std::move(argument)) {
  const auto last = termination_index(num_);
  for (const auto& b : den_) {
    if (!b.is_nonpositive_integer()) continue;
    const auto vanishes_after = static_cast<std::uint64_t>(-b.to_int64());
    if (!last || *last > vanishes_after) {
      throw DomainError("denominator parameter " + b.str() +
                        " is a non-positive integer and the series does not terminate before it");
    }
  }
  if (!last && num_.size() > den_.size() + 1) {
    throw DomainError("non-terminating series requires p <= q + 1");
  }
}

Rational SeriesSpec::omega() const {
  Rational w;
  for (const auto& b : den_) w += b;
  for (const auto& a : num_) w -= a;
  return w;
}

std::optional<std::uint64_t> SeriesSpec::last_term_index() const { return termination_index(num_); }

std::string SeriesSpec::str() const {
  return std::to_string(p()) + "F" + std::to_string(q()) + "(" + join(num_) + ";" + join(den_) + ";" +
         z_.str() + ")";
}

SeriesSpec SeriesSpec::parse(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')') {
    throw ParseError("series must look like pFq(a,..;b,..;z): '" + std::string(text) + "'");
  }
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  const auto s1 = body.find(';');
  const auto s2 = s1 == std::string_view::npos ? s1 : body.find(';', s1 + 1);
  if (s2 == std::string_view::npos) throw ParseError("series needs two ';' separators");
  return SeriesSpec(parse_list(body.substr(0, s1)), parse_list(body.substr(s1 + 1, s2 - s1 - 1)),
                    Rational::parse(body.substr(s2 + 1)));
}

SeriesSpec cancel_common_parameters(const SeriesSpec& spec) {
  std::vector<Rational> num = spec.numerator();
  std::vector<Rational> den;
  for (const auto& b : spec.denominator()) {
    auto it = b.is_nonpositive_integer() ? num.end() : std::find(num.begin(), num.end(), b);
    if (it != num.end()) {
      num.erase(it);
    } else {
      den.push_back(b);
    }
  }
  return SeriesSpec(std::move(num), std::move(den), spec.argument());
}

bool same_series(const SeriesSpec& a, const SeriesSpec& b) {
  SeriesSpec ca = cancel_common_parameters(a);
  SeriesSpec cb = cancel_common_parameters(b);
  auto sorted = [](std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return ca.argument() == cb.argument() && sorted(ca.numerator()) == sorted(cb.numerator()) &&
         sorted(ca.denominator()) == sorted(cb.denominator());
}

std::string_view to_string(ConvergenceClass c) noexcept {
  switch (c) {
    case ConvergenceClass::terminating: return "terminating";
    case ConvergenceClass::geometric: return "geometric";
    case ConvergenceClass::unity_convergent: return "unity_convergent";
    case ConvergenceClass::divergent: return "divergent";
  }
  return "unknown";
}

ConvergenceClass convergence_class(const SeriesSpec& spec) {
  if (spec.last_term_index()) return ConvergenceClass::terminating;
  if (spec.p() <= spec.q()) return ConvergenceClass::geometric;
  if (spec.p() == spec.q() + 1) {
    const Rational& z = spec.argument();
    if (abs(z) < Rational(1)) return ConvergenceClass::geometric;
    if (z == Rational(1) && spec.omega().sign() > 0) return ConvergenceClass::unity_convergent;
  }
  return ConvergenceClass::divergent;
}

}  // namespace hypersum
