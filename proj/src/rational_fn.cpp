#include "agpoly/rational_fn.hpp"

#include <algorithm>
#include <string>

namespace agpoly {

BinomialFactor::BinomialFactor(int a, int b) : a_(a), b_(b) {
  if (!(a > 0 || (a == 0 && b > 0))) {
    throw UsageError("factor (" + std::to_string(a) + ", " + std::to_string(b) + ") is not canonical");
  }
}

LaurentPoly BinomialFactor::as_poly() const { return LaurentPoly{{0, 0, 1}, {a_, b_, -1}}; }

std::pair<UnitMonomial, BinomialFactor> canonicalize(int a, int b) {
  if (a == 0 && b == 0) throw UsageError("factor 1 - q^0 z^0 is zero");
  if (a > 0 || (a == 0 && b > 0)) return {UnitMonomial{}, BinomialFactor(a, b)};
  // 1/(1 - m^{-1}) = -m / (1 - m) with m = q^{-a} z^{-b}.
  return {UnitMonomial{-1, -a, -b}, BinomialFactor(-a, -b)};
}

RationalFn::RationalFn(LaurentPoly numerator) : numerator_(std::move(numerator)) {}

RationalFn::RationalFn(UnitMonomial unit, LaurentPoly numerator, std::vector<BinomialFactor> denominator)
    : unit_(unit), numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  std::sort(denominator_.begin(), denominator_.end());
}

RationalFn RationalFn::from_raw_factors(const LaurentPoly& numerator,
                                        std::span<const std::pair<int, int>> factors) {
  RationalFn out(numerator);
  for (const auto& [a, b] : factors) out.divide_by(a, b);
  return out;
}

LaurentPoly RationalFn::full_numerator() const {
  return unit_.sign == 1 ? numerator_.shifted(unit_.q_exp, unit_.z_exp)
                         : -numerator_.shifted(unit_.q_exp, unit_.z_exp);
}

RationalFn& RationalFn::divide_by(int a, int b) {
  auto [unit, factor] = canonicalize(a, b);
  unit_ *= unit;
  denominator_.insert(std::upper_bound(denominator_.begin(), denominator_.end(), factor), factor);
  return *this;
}

std::vector<BinomialFactor> factor_difference(const std::vector<BinomialFactor>& a,
                                              const std::vector<BinomialFactor>& b) {
  std::vector<BinomialFactor> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {

LaurentPoly product_of(const std::vector<BinomialFactor>& factors) {
  LaurentPoly out = 1;
  for (const auto& f : factors) out *= f.as_poly();
  return out;
}

}  // namespace

bool RationalFn::equals(const RationalFn& other) const {
  // x/A == y/B  <=>  x * (B \ A) == y * (A \ B)
  const LaurentPoly lhs = full_numerator() * product_of(factor_difference(other.denominator_, denominator_));
  const LaurentPoly rhs = other.full_numerator() * product_of(factor_difference(denominator_, other.denominator_));
  return lhs == rhs;
}

RationalFn operator+(const RationalFn& x, const RationalFn& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const auto only_y = factor_difference(y.denominator_, x.denominator_);
  const auto only_x = factor_difference(x.denominator_, y.denominator_);
  std::vector<BinomialFactor> denominator = x.denominator_;
  denominator.insert(denominator.end(), only_y.begin(), only_y.end());
  LaurentPoly numerator = x.full_numerator() * product_of(only_y) + y.full_numerator() * product_of(only_x);
  return RationalFn(UnitMonomial{}, std::move(numerator), std::move(denominator));
}

RationalFn RationalFn::operator-() const {
  RationalFn out = *this;
  out.unit_.sign = -out.unit_.sign;
  return out;
}

RationalFn rational_add(const RationalFn& x, const RationalFn& y) { return x + y; }

std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const BinomialFactor& f) {
  if (num.is_zero()) return LaurentPoly{};
  // num = g - g*m with m = q^a z^b > 1 in (q, z) lex order, so the lowest
  // term of the remainder is always the next term of g.
  const Exponent top = num.terms().rbegin()->first;
  const Exponent limit{top.q - f.a(), top.z - f.b()};
  // for a = 0 the lex bound leaves z unbounded inside a q-slice
  const int z_limit = *num.max_z() - f.b();
  LaurentPoly quotient;
  LaurentPoly remainder = num;
  while (!remainder.is_zero()) {
    const auto [e, c] = *remainder.terms().begin();
    if (limit < e || (f.a() == 0 && e.z > z_limit)) return std::nullopt;
    const Integer coeff = c;
    quotient.add_term(e, coeff);
    remainder.add_term(e, -coeff);
    remainder.add_term({e.q + f.a(), e.z + f.b()}, coeff);
  }
  return quotient;
}

Series expand_rational(const RationalFn& x, int cutoff) {
  if (cutoff < 0) throw UsageError("series cutoff must be >= 0");
  const LaurentPoly numerator = x.full_numerator();
  if (numerator.is_zero()) return Series(LaurentPoly{}, cutoff);

  int max_ratio_num = 0;  // max b/a over factors, as a fraction
  int max_ratio_den = 1;
  for (const auto& f : x.denominator()) {
    if (f.b() < 0) {
      throw ExpansionError("unsupported expansion region for 1/(1 - q^" + std::to_string(f.a()) + " z^" +
                           std::to_string(f.b()) + ")");
    }
    if (f.a() == 0) {
      throw ExpansionError("1/(1 - z^" + std::to_string(f.b()) + ") has no finite q-degree truncation");
    }
    if (static_cast<long>(f.b()) * max_ratio_den > static_cast<long>(max_ratio_num) * f.a()) {
      max_ratio_num = f.b();
      max_ratio_den = f.a();
    }
  }

  // Dense product of the geometric series, long enough to survive the
  // numerator's lowest q-shift.
  const int shift_q = *numerator.min_q();
  const int depth = cutoff - shift_q;
  if (depth < 0) return Series(LaurentPoly{}, cutoff);
  const int width = static_cast<int>(static_cast<long>(depth) * max_ratio_num / max_ratio_den) + 1;
  std::vector<std::vector<Integer>> grid(depth + 1, std::vector<Integer>(width));
  grid[0][0] = 1;
  for (const auto& f : x.denominator()) {
    for (int i = f.a(); i <= depth; ++i) {
      for (int j = f.b(); j < width; ++j) {
        const Integer& src = grid[i - f.a()][j - f.b()];
        if (src != 0) grid[i][j] += src;
      }
    }
  }

  LaurentPoly product;
  Integer prod;
  for (const auto& [e, c] : numerator.terms()) {
    for (int i = 0; i + e.q <= cutoff; ++i) {
      for (int j = 0; j < width; ++j) {
        if (grid[i][j] == 0) continue;
        prod = c * grid[i][j];
        product.add_term({i + e.q, j + e.z}, prod);
      }
    }
  }
  for (const auto& [e, c] : product.terms()) {
    if (e.q < 0 || e.z < 0) {
      throw ExpansionError("expansion has a nonzero term q^" + std::to_string(e.q) + "*z^" + std::to_string(e.z) +
                           " outside i, j >= 0");
    }
  }
  return Series(std::move(product), cutoff);
}

}  // namespace agpoly
