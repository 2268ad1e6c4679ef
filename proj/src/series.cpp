#include "agpoly/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace agpoly {

namespace {

void check_support(const LaurentPoly& poly, int cutoff) {
  if (cutoff < 0) throw UsageError("series cutoff must be >= 0, got " + std::to_string(cutoff));
  for (const auto& [e, c] : poly.terms()) {
    if (e.q < 0 || e.q > cutoff || e.z < 0) {
      throw ExpansionError("series term q^" + std::to_string(e.q) + "*z^" + std::to_string(e.z) +
                           " lies outside 0 <= i <= " + std::to_string(cutoff) + ", 0 <= j");
    }
  }
}

}  // namespace

Series::Series(LaurentPoly poly, int cutoff) : poly_(std::move(poly)), cutoff_(cutoff) {
  check_support(poly_, cutoff_);
}

Series Series::from_poly(const LaurentPoly& poly, int cutoff) { return Series(poly.truncated(cutoff), cutoff); }

Series& Series::operator+=(const Series& other) {
  cutoff_ = std::min(cutoff_, other.cutoff_);
  poly_ = (poly_ + other.poly_).truncated(cutoff_);
  return *this;
}

Series& Series::operator-=(const Series& other) {
  cutoff_ = std::min(cutoff_, other.cutoff_);
  poly_ = (poly_ - other.poly_).truncated(cutoff_);
  return *this;
}

Series Series::shifted(int dq, int dz) const {
  if (dq < 0 || dz < 0) throw UsageError("series shift must be nonnegative");
  return Series(poly_.shifted(dq, dz).truncated(cutoff_), cutoff_);
}

Series Series::restricted(int cutoff) const {
  if (cutoff > cutoff_) throw UsageError("cannot extend a series beyond its cutoff");
  return Series(poly_.truncated(cutoff), cutoff);
}

Series series_mul(const Series& x, const Series& y) {
  const int cutoff = std::min(x.cutoff(), y.cutoff());
  LaurentPoly out;
  Integer prod;
  for (const auto& [ex, cx] : x.poly().terms()) {
    if (ex.q > cutoff) break;
    for (const auto& [ey, cy] : y.poly().terms()) {
      if (ex.q + ey.q > cutoff) break;
      prod = cx * cy;
      out.add_term({ex.q + ey.q, ex.z + ey.z}, prod);
    }
  }
  return Series(std::move(out), cutoff);
}

Series expand_factor(int alpha, int beta, int cutoff) {
  if (cutoff < 0) throw UsageError("series cutoff must be >= 0");
  if (alpha == 0 && beta == 0) throw UsageError("factor 1 - q^0 z^0 is zero");
  const bool positive = alpha >= 0 && beta >= 0;
  const bool negative = alpha <= 0 && beta <= 0;
  if (!positive && !negative) {
    throw ExpansionError("unsupported expansion region for 1/(1 - q^" + std::to_string(alpha) + " z^" +
                         std::to_string(beta) + ")");
  }
  if (alpha == 0) {
    throw ExpansionError("1/(1 - z^" + std::to_string(beta) + ") has no finite q-degree truncation");
  }
  const int step_q = std::abs(alpha);
  const int step_z = std::abs(beta);
  LaurentPoly out;
  if (positive) {
    for (int t = 0; t * step_q <= cutoff; ++t) out.add_term({t * step_q, t * step_z}, 1);
  } else {
    for (int t = 1; t * step_q <= cutoff; ++t) out.add_term({t * step_q, t * step_z}, -1);
  }
  return Series(std::move(out), cutoff);
}

std::optional<CoefficientDiff> first_difference_through(const LaurentPoly& lhs, const LaurentPoly& rhs,
                                                        int cutoff) {
  return first_difference(lhs.truncated(cutoff), rhs.truncated(cutoff));
}

}  // namespace agpoly
