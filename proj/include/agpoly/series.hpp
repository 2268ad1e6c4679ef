#pragma once

// Power series in q, z known exactly through a q-degree cutoff, and the
// geometric-series expansion rules used for vertex contributions.

#include <optional>
#include <stdexcept>

#include "agpoly/laurent_poly.hpp"

namespace agpoly {

/// Raised when a factor 1/(1 - q^a z^b) has no supported expansion.
class ExpansionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A LaurentPoly supported in 0 <= i <= cutoff, 0 <= j, whose coefficients
/// are exact for every q-degree up to and including the cutoff.
class Series {
 public:
  Series() = default;
  Series(LaurentPoly poly, int cutoff);

  /// Truncates `poly` to the cutoff. Throws if a surviving term has a
  /// negative exponent.
  static Series from_poly(const LaurentPoly& poly, int cutoff);

  const LaurentPoly& poly() const { return poly_; }
  int cutoff() const { return cutoff_; }

  Integer coefficient(int q_exp, int z_exp) const { return poly_.coefficient(q_exp, z_exp); }

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  Series operator-() const { return Series(-poly_, cutoff_); }

  /// Product with q^dq z^dz (dq, dz >= 0), keeping the cutoff.
  Series shifted(int dq, int dz) const;

  /// Same series known to a smaller cutoff.
  Series restricted(int cutoff) const;

 private:
  LaurentPoly poly_;
  int cutoff_ = 0;
};

Series series_mul(const Series& x, const Series& y);

/// Expansion of 1/(1 - q^alpha z^beta) truncated at q-degree `cutoff`:
/// sum_{i >= 0} q^{i alpha} z^{i beta} when alpha, beta >= 0 and
/// -sum_{i < 0} q^{i alpha} z^{i beta} when alpha, beta <= 0.
Series expand_factor(int alpha, int beta, int cutoff);

/// First coefficient with q-degree <= cutoff where the two polynomials differ.
std::optional<CoefficientDiff> first_difference_through(const LaurentPoly& lhs, const LaurentPoly& rhs,
                                                        int cutoff);

}  // namespace agpoly
