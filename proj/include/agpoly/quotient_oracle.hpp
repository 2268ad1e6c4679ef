#pragma once

// Direct linear-algebra computation of the graded dimensions of
//   C[e_1, ..., e_N] / I_N(k,l,r)
// by rank computations on each bigraded piece of the ideal.
//
// This module depends only on the algebra core; it must not use the basis,
// fermionic or vertex modules it is meant to validate.

#include <cstdint>
#include <map>
#include <vector>

#include "agpoly/laurent_poly.hpp"
#include "agpoly/params.hpp"

namespace agpoly::quotient {

/// Exponent vector of a monomial in e_1 .. e_N.
using Monomial = std::vector<int>;

/// Homogeneous polynomial in e_1 .. e_N with integer coefficients.
struct HomogeneousPoly {
  std::map<Monomial, Integer> terms;
  int deg_q = 0;
  int deg_z = 0;
};

struct IdealGeneratorSet {
  std::vector<HomogeneousPoly> generators;
};

/// e_1^{l+1}, e_N^{r+1} and the coefficients of t^i, k+1 <= i <= N(k+1), in
/// e(t)^{k+1} with e(t) = sum_s e_s t^s (multinomial coefficients kept).
IdealGeneratorSet ideal_generators(const Params& params);

/// Monomials of q-degree i (sum s a_s) and z-degree j (sum a_s), lexicographic.
std::vector<Monomial> monomials_of_bidegree(int N, int i, int j);

enum class Field { prime, rational };

/// Prime used for modular ranks (2^61 - 1).
inline constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

/// Spanning rows of I cap (bidegree (i, j)) over the monomial columns.
std::vector<std::vector<Integer>> ideal_span_matrix(const IdealGeneratorSet& ideal, int N, int i, int j,
                                                    const std::vector<Monomial>& columns);

std::size_t rank_mod_prime(const std::vector<std::vector<Integer>>& rows, std::size_t columns);
std::size_t rank_rational(const std::vector<std::vector<Integer>>& rows, std::size_t columns);

/// dim of the (i, j) piece of the quotient.
long graded_dimension(const Params& params, int i, int j, Field field = Field::prime);

/// sum_{0 <= j <= i <= qbound} graded_dimension(i, j) q^i z^j.
LaurentPoly hilbert_by_quotient(const Params& params, int qbound, Field field = Field::prime);

}  // namespace agpoly::quotient
