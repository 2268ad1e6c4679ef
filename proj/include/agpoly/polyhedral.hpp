#pragma once

// Monomial basis of D_N(k,l,r) as lattice points of the polytope
//   x_1 <= l,  x_N <= r,  x_i + x_{i+1} <= k,  x >= 0
// and the generating functions built from it.

#include <vector>

#include "agpoly/laurent_poly.hpp"
#include "agpoly/params.hpp"

namespace agpoly::polyhedral {

/// Exponents (a_1, ..., a_N) of the monomial e_1^{a_1} ... e_N^{a_N}.
struct ExponentVector {
  std::vector<int> a;

  /// sum i * a_i
  int phi_q() const;
  /// sum a_i
  int phi_z() const;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

bool is_admissible(const ExponentVector& v, const Params& params);

/// All admissible exponent vectors in lexicographic order.
std::vector<ExponentVector> enumerate_basis(const Params& params);

/// sum over admissible a of q^{phi_q(a)} z^{phi_z(a)}.
LaurentPoly hilbert_by_enumeration(const Params& params);

/// Same polynomial from a left-to-right sweep over the last coordinate.
LaurentPoly hilbert_by_transfer(const Params& params);

/// d_N(k,l,r-1) + (q^N z)^r d_{N-1}(k,l,k-r); requires r >= 1 and N >= 3.
LaurentPoly recursion_rhs(const Params& params);

/// Image of a polynomial under e_i -> e_{N+1-i}: q^i z^j -> q^{(N+1)j - i} z^j.
LaurentPoly reflect(const LaurentPoly& poly, int N);

/// d_N(k,l,r) == reflect(d_N(k,r,l)).
bool reflect_check(const Params& params);

struct DegreeBounds {
  int maxdeg_q = 0;
  int maxdeg_z = 0;
  friend bool operator==(const DegreeBounds&, const DegreeBounds&) = default;
};

DegreeBounds degree_bounds(const Params& params);

/// maxdeg_q + 2(N+1); negative l or r are clamped to zero first.
int default_cutoff(const Params& params);

}  // namespace agpoly::polyhedral
