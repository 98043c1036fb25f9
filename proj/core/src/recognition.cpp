#include "hypersum/recognition.hpp"

#include <algorithm>
#include <string>

#include "hypersum/errors.hpp"
#include "hypersum/pfq.hpp"

namespace hypersum {

std::string_view to_string(Confidence c) noexcept {
  switch (c) {
    case Confidence::confirmed: return "confirmed";
    case Confidence::tentative: return "tentative";
    case Confidence::none: return "none";
  }
  return "unknown";
}

namespace {

using Matrix = std::vector<std::vector<BigFloat>>;
using IntMatrix = std::vector<std::vector<BigInt>>;

long bit_length(const BigInt& v) { return static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2)); }

BigFloat residual_of(std::span<const BigFloat> x, const std::vector<BigInt>& r, Bits wp) {
  BigFloat acc(wp);
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i].rounded(wp) * r[i];
  return abs(acc);
}

std::vector<BigInt> normalized(std::vector<BigInt> r) {
  BigInt g = 0;
  for (const auto& v : r) g = gcd(g, v);
  if (g > 1) {
    for (auto& v : r) v /= g;
  }
  auto first = std::find_if(r.begin(), r.end(), [](const BigInt& v) { return v != 0; });
  if (first != r.end() && *first < 0) {
    for (auto& v : r) v = -v;
  }
  return r;
}

RelationResult classify(std::span<const BigFloat> x, std::vector<BigInt> r, Bits precision,
                        const BigInt& bound, std::size_t iterations) {
  RelationResult out;
  out.coefficients = normalized(std::move(r));
  out.residual = residual_of(x, out.coefficients, precision);
  out.iterations = iterations;
  const bool small = std::all_of(out.coefficients.begin(), out.coefficients.end(),
                                 [&](const BigInt& v) { return abs(v) <= bound; });
  const BigFloat limit = BigFloat::exp2(-static_cast<long>(precision / 2), 64);
  out.confidence = (small && out.residual < limit) ? Confidence::confirmed : Confidence::tentative;
  return out;
}

// size-reduce row i of H against rows j = jmax..0
void reduce_row(std::size_t i, std::size_t jmax, Matrix& h, std::vector<BigFloat>& y, IntMatrix& a,
                IntMatrix& b) {
  const std::size_t n = y.size();
  for (std::size_t jj = jmax + 1; jj-- > 0;) {
    if (h[jj][jj].is_zero()) continue;
    const BigInt t = (h[i][jj] / h[jj][jj]).round_to_integer();
    if (t == 0) continue;
    y[jj] += y[i] * t;
    for (std::size_t k = 0; k <= jj; ++k) h[i][k] -= h[jj][k] * t;
    for (std::size_t k = 0; k < n; ++k) {
      a[i][k] -= t * a[jj][k];
      b[k][jj] += t * b[k][i];
    }
  }
}

}  // namespace

RelationResult find_relation(std::span<const BigFloat> values, Bits precision, const BigInt& coeff_bound) {
  const std::size_t n = values.size();
  if (n < 2) throw DomainError("find_relation needs at least two values");
  if (precision < 128) throw DomainError("find_relation needs at least 128 bits of precision");
  if (coeff_bound < 1) throw DomainError("coefficient bound must be positive");
  const long bound_bits = bit_length(coeff_bound);
  const long needed = static_cast<long>(n) * bound_bits + 32;
  if (static_cast<long>(precision) < needed) {
    throw PrecisionTooLowError(std::to_string(precision) + " bits cannot certify relations among " +
                               std::to_string(n) + " values with coefficients up to 2^" +
                               std::to_string(bound_bits) + "; need " + std::to_string(needed));
  }
  const Bits wp = precision + kGuardBits;

  for (std::size_t i = 0; i < n; ++i) {
    if (values[i].is_zero()) {
      std::vector<BigInt> r(n, 0);
      r[i] = 1;
      return classify(values, std::move(r), precision, coeff_bound, 0);
    }
  }

  // y = x / |x|, s_k = |(x_k, ..., x_{n-1})| / |x|
  std::vector<BigFloat> y;
  y.reserve(n);
  for (const auto& v : values) y.push_back(v.rounded(wp));
  std::vector<BigFloat> s(n, BigFloat(wp));
  {
    BigFloat acc(wp);
    for (std::size_t k = n; k-- > 0;) {
      acc += y[k] * y[k];
      s[k] = sqrt(acc);
    }
    const BigFloat norm = s[0];
    for (auto& v : y) v /= norm;
    for (auto& v : s) v /= norm;
  }

  Matrix h(n, std::vector<BigFloat>(n - 1, BigFloat(wp)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < n && j <= i; ++j) {
      if (i == j) {
        h[i][j] = s[j + 1] / s[j];
      } else {
        h[i][j] = -(y[i] * y[j]) / (s[j] * s[j + 1]);
      }
    }
  }
  IntMatrix a(n, std::vector<BigInt>(n, 0));
  IntMatrix b(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = b[i][i] = 1;
  for (std::size_t i = 1; i < n; ++i) reduce_row(i, i - 1, h, y, a, b);

  const BigFloat gamma = BigFloat(2, wp) / sqrt(BigFloat(3, wp)) + BigFloat::exp2(-10, wp);
  const long detect_exp = -(static_cast<long>(precision) - bound_bits - 16);
  const BigFloat detect = BigFloat::exp2(detect_exp, 64);
  const BigFloat norm_limit = BigFloat(coeff_bound, wp) * sqrt(BigFloat(static_cast<long>(n), wp));

  for (std::size_t iter = 1; iter <= kPslqMaxIterations; ++iter) {
    // pick m maximizing gamma^(m+1) |H_mm|
    std::size_t m = 0;
    BigFloat best(wp);
    BigFloat gpow = gamma;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      BigFloat v = gpow * abs(h[i][i]);
      if (i == 0 || v > best) {
        best = v;
        m = i;
      }
      gpow *= gamma;
    }
    std::swap(y[m], y[m + 1]);
    std::swap(a[m], a[m + 1]);
    std::swap(h[m], h[m + 1]);
    for (std::size_t k = 0; k < n; ++k) std::swap(b[k][m], b[k][m + 1]);

    if (m + 2 < n) {
      const BigFloat t0 = sqrt(h[m][m] * h[m][m] + h[m][m + 1] * h[m][m + 1]);
      if (t0.is_zero()) break;
      const BigFloat t1 = h[m][m] / t0;
      const BigFloat t2 = h[m][m + 1] / t0;
      for (std::size_t i = m; i < n; ++i) {
        const BigFloat t3 = h[i][m];
        const BigFloat t4 = h[i][m + 1];
        h[i][m] = t1 * t3 + t2 * t4;
        h[i][m + 1] = t1 * t4 - t2 * t3;
      }
    }
    for (std::size_t i = m + 1; i < n; ++i) reduce_row(i, std::min(i - 1, m + 1), h, y, a, b);

    // smallest |y_j| marks a candidate relation in column j of B
    std::size_t jmin = 0;
    for (std::size_t j = 1; j < n; ++j) {
      if (abs(y[j]) < abs(y[jmin])) jmin = j;
    }
    if (abs(y[jmin]) < detect) {
      std::vector<BigInt> r(n);
      for (std::size_t k = 0; k < n; ++k) r[k] = b[k][jmin];
      return classify(values, std::move(r), precision, coeff_bound, iter);
    }

    // any relation has Euclidean norm >= 1 / max |H_jj|
    BigFloat hmax(wp);
    for (std::size_t j = 0; j + 1 < n; ++j) hmax = std::max(hmax, abs(h[j][j]));
    if (hmax.is_zero()) break;
    if (BigFloat(1, wp) / hmax > norm_limit) {
      RelationResult none;
      none.iterations = iter;
      return none;
    }
  }
  RelationResult none;
  none.iterations = kPslqMaxIterations;
  return none;
}

const std::vector<ExactValue>& default_recognition_basis() {
  static const std::vector<ExactValue> basis{
      ExactValue(1),
      ExactValue::pi(),
      ExactValue::monomial(Rational(1), 0, 4),
      ExactValue::sqrt2(),
      ExactValue::monomial(Rational(1), 1, 2),
  };
  return basis;
}

Recognition recognize_over(const BigFloat& x, std::span<const ExactValue> basis, Bits precision,
                           const BigInt& coeff_bound) {
  Recognition out;
  std::vector<BigFloat> values;
  values.reserve(basis.size() + 1);
  values.push_back(x.rounded(precision));
  for (const auto& c : basis) values.push_back(ev_to_numeric(c, precision));

  try {
    out.relation = find_relation(values, precision, coeff_bound);
  } catch (const PrecisionTooLowError&) {
    return out;
  }
  const auto& r = out.relation.coefficients;
  if (r.empty() || r[0] == 0) return out;

  ExactValue v;
  for (std::size_t i = 1; i < r.size(); ++i) v += basis[i - 1] * ExactValue(Rational(BigInt(-r[i]), r[0]));

  // re-evaluate with 64 extra bits
  const BigFloat check = ev_to_numeric(v, precision + 64);
  BigFloat scale = abs(x);
  if (scale < BigFloat(1, 64)) scale = BigFloat(1, 64);
  const BigFloat tol = scale * BigFloat::exp2(-static_cast<long>(precision) + 16, 64);
  if (abs(check - x.rounded(precision + 64)) > tol) return out;

  const auto& def = default_recognition_basis();
  const bool validated_basis = std::equal(basis.begin(), basis.end(), def.begin(), def.end());
  out.confidence = validated_basis ? out.relation.confidence : Confidence::tentative;
  out.value = std::move(v);
  return out;
}

std::optional<ExactValue> recognize(const BigFloat& x, Bits precision, const BigInt& coeff_bound) {
  if (precision < 128) return std::nullopt;
  Recognition r = recognize_over(x, default_recognition_basis(), precision, coeff_bound);
  if (r.confidence != Confidence::confirmed) return std::nullopt;
  return r.value;
}

}  // namespace hypersum
