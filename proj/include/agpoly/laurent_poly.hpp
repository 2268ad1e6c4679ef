#pragma once

// Exact sparse Laurent polynomials in two variables q and z with
// arbitrary-precision integer coefficients.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <gmpxx.h>

namespace agpoly {

using Integer = mpz_class;

/// Exponent pair of the monomial q^q z^z.
struct Exponent {
  int q = 0;
  int z = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Raised when an operation's precondition on its parameters is violated.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(std::initializer_list<std::tuple<int, int, long>> terms);

  static LaurentPoly monomial(int q_exp, int z_exp, const Integer& coeff = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(int q_exp, int z_exp) const;

  /// Adds coeff * q^q_exp z^z_exp, dropping the entry if it cancels.
  void add_term(Exponent e, const Integer& coeff);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Product with q^dq z^dz.
  LaurentPoly shifted(int dq, int dz) const;
  /// Terms with q-exponent <= max_q.
  LaurentPoly truncated(int max_q) const;
  /// Applies (i, j) -> map(i, j) to every exponent.
  template <typename F>
  LaurentPoly map_exponents(F&& map) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.add_term(map(e), c);
    return out;
  }

  /// Value at q = z = 1.
  Integer evaluate_at_one() const;

  std::optional<int> min_q() const;
  std::optional<int> max_q() const;
  std::optional<int> min_z() const;
  std::optional<int> max_z() const;

  bool all_coefficients_nonnegative() const;

  /// Canonical text form, e.g. "1 + q*z + -2*q^2*z".
  std::string to_text() const;

 private:
  TermMap terms_;
};

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q);

/// First exponent (in (i, j) order) where the coefficients differ.
struct CoefficientDiff {
  Exponent at;
  Integer lhs;
  Integer rhs;
};
std::optional<CoefficientDiff> first_difference(const LaurentPoly& lhs, const LaurentPoly& rhs);

std::string describe(const CoefficientDiff& diff);

}  // namespace agpoly
