#pragma once

// Rational functions whose denominators are products of binomials
// (1 - q^a z^b), kept in a canonical orientation so that denominators from
// different vertex terms can be compared and combined.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "agpoly/laurent_poly.hpp"
#include "agpoly/series.hpp"

namespace agpoly {

/// The factor (1 - q^a z^b) with (a > 0) or (a == 0 and b > 0).
class BinomialFactor {
 public:
  BinomialFactor(int a, int b);

  int a() const { return a_; }
  int b() const { return b_; }

  /// 1 - q^a z^b as a polynomial.
  LaurentPoly as_poly() const;

  friend auto operator<=>(const BinomialFactor&, const BinomialFactor&) = default;
  friend bool operator==(const BinomialFactor&, const BinomialFactor&) = default;

 private:
  int a_;
  int b_;
};

/// sign * q^q_exp * z^z_exp
struct UnitMonomial {
  int sign = 1;
  int q_exp = 0;
  int z_exp = 0;

  UnitMonomial& operator*=(const UnitMonomial& other) {
    sign *= other.sign;
    q_exp += other.q_exp;
    z_exp += other.z_exp;
    return *this;
  }
  LaurentPoly as_poly() const { return LaurentPoly::monomial(q_exp, z_exp, sign); }
  friend bool operator==(const UnitMonomial&, const UnitMonomial&) = default;
};

/// Brings (1 - q^a z^b) into canonical orientation. The returned unit u
/// satisfies 1/(1 - q^a z^b) = u / (1 - q^a' z^b').
std::pair<UnitMonomial, BinomialFactor> canonicalize(int a, int b);

/// unit * numerator / prod(denominator).
class RationalFn {
 public:
  RationalFn() = default;
  RationalFn(LaurentPoly numerator);  // NOLINT(google-explicit-constructor)
  RationalFn(UnitMonomial unit, LaurentPoly numerator, std::vector<BinomialFactor> denominator);

  /// numerator / prod_{(a,b)} (1 - q^a z^b) with arbitrary orientations.
  static RationalFn from_raw_factors(const LaurentPoly& numerator, std::span<const std::pair<int, int>> factors);

  const UnitMonomial& unit() const { return unit_; }
  const LaurentPoly& numerator() const { return numerator_; }
  /// Sorted multiset of canonical factors.
  const std::vector<BinomialFactor>& denominator() const { return denominator_; }

  /// unit * numerator.
  LaurentPoly full_numerator() const;

  bool is_zero() const { return numerator_.is_zero(); }

  /// Divides by (1 - q^a z^b) in any orientation.
  RationalFn& divide_by(int a, int b);

  /// Denominator-insensitive equality by cross multiplication.
  bool equals(const RationalFn& other) const;
  friend bool operator==(const RationalFn& x, const RationalFn& y) { return x.equals(y); }

  friend RationalFn operator+(const RationalFn& x, const RationalFn& y);
  RationalFn operator-() const;
  friend RationalFn operator-(const RationalFn& x, const RationalFn& y) { return x + (-y); }

 private:
  UnitMonomial unit_;
  LaurentPoly numerator_;
  std::vector<BinomialFactor> denominator_;
};

RationalFn rational_add(const RationalFn& x, const RationalFn& y);

/// g with g * (1 - q^a z^b) == num, if such a Laurent polynomial exists.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const BinomialFactor& f);

/// Series expansion of x through q-degree `cutoff`, with every factor
/// expanded as a geometric series in its canonical orientation.
Series expand_rational(const RationalFn& x, int cutoff);

/// Multiset difference a \ b and intersection, both sorted.
std::vector<BinomialFactor> factor_difference(const std::vector<BinomialFactor>& a,
                                              const std::vector<BinomialFactor>& b);

}  // namespace agpoly
