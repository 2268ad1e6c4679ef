#pragma once

// Fermionic (Gordon-type) sum for the Hilbert polynomial d_N(k,l,r;q,z).

#include <span>
#include <vector>

#include "agpoly/laurent_poly.hpp"
#include "agpoly/params.hpp"

namespace agpoly::fermionic {

/// Gaussian binomial [n choose m]_q as a polynomial in q; zero unless
/// 0 <= m <= n. Results are memoized process-wide.
LaurentPoly gaussian_binomial(int n, int m);

/// Quadratic form Q_{ij} = min(i, j) and the boundary shifts
/// L_i = max(i - l, 0), R_i = max(i - r, 0), all 1-based in the math but
/// stored 0-based here.
struct GordonData {
  int k = 0;
  std::vector<std::vector<int>> Q;
  std::vector<int> L;
  std::vector<int> R;
};

GordonData gordon_data(int k, int l, int r);

/// sum over v in Z_+^k of
///   q^{v'Qv + L'v} z^{sum i v_i} prod_i [(N+1)i - (2Qv + L + R - v)_i choose v_i]_q
LaurentPoly fermionic_sum(const Params& params);

/// Single summand of fermionic_sum at the vector v (length k).
LaurentPoly fermionic_summand(const Params& params, std::span<const int> v);

/// Same sum with the summand written in the l = r = k form
///   q^{sum_{ij} v_i v_j min(i,j)} z^{sum i v_i}
///     prod_i [(N+1)i - 2 sum_j v_j min(i,j) + v_i choose v_i]_q.
LaurentPoly andrews_gordon_lhs(int N, int k);
LaurentPoly andrews_gordon_summand(int N, std::span<const int> v);

/// Visits every v with 0 <= v_i <= bound_i, used to check that the
/// pruned enumeration misses no nonzero term.
LaurentPoly fermionic_sum_bounded(const Params& params, const std::vector<int>& bounds);

}  // namespace agpoly::fermionic
