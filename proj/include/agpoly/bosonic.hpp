#pragma once

// Vertex-cone (bosonic) side: the simple vertices M_{m,n} of the polytope,
// their tangent-cone generators, the per-vertex rational contributions and
// their series, the even/odd alternating sums, the grouped vertices at
// l = r = k and the singular-vertex contribution for odd N.

#include <optional>
#include <utility>
#include <vector>

#include "agpoly/laurent_poly.hpp"
#include "agpoly/params.hpp"
#include "agpoly/rational_fn.hpp"
#include "agpoly/series.hpp"

namespace agpoly::bosonic {

enum class Parity { even, odd };

const char* to_string(Parity parity);

/// (phi_q, phi_z) of a vector: (sum i x_i, sum x_i).
using PhiPair = std::pair<int, int>;
PhiPair phi_of(const std::vector<int>& x);

/// M_{m,n} = (l, k-l, l, ... [m entries], 0, ..., 0, ... r, k-r, r [n entries]).
std::vector<int> vertex_coordinates(const Params& params, int m, int n);

/// The N tangent-cone generators v^1 .. v^N at M_{m,n}.
std::vector<std::vector<int>> cone_generators(int N, int m, int n);

/// (phi_q(v^i), phi_z(v^i)) from the five-column closed-form table,
/// independent of the generator vectors themselves.
PhiPair generator_phi_table(int N, int m, int n, int i);

/// Exponents (alpha, beta) of the denominator factors 1 - q^alpha z^beta of
/// the vertex contribution, in block order.
std::vector<std::pair<int, int>> vertex_denominator(int N, int m, int n);

struct VertexContribution {
  int m = 0;
  int n = 0;
  std::vector<int> coordinates;
  std::vector<std::vector<int>> generators;
  RationalFn rational;
  int phi_q_M = 0;
  int phi_z_M = 0;
};

/// Builds the contribution of M_{m,n} and checks that the generator
/// exponents agree with the denominator blocks (throws std::logic_error).
VertexContribution vertex_contribution(const Params& params, int m, int n);

/// Rational contribution of M_{m,n}; zero when m < 0 or n < 0.
RationalFn vertex_rational(const Params& params, int m, int n);

/// Series d^{m,n}_N(k,l,r) through q-degree `cutoff`; zero when m < 0 or n < 0.
Series vertex_series(const Params& params, int m, int n, int cutoff);

/// True when (m, n) enters the alternating sum of the given parity.
bool vertex_in_sum(int N, int m, int n, Parity parity);

Series bosonic_sum(const Params& params, Parity parity, int cutoff);

/// The parities whose alternating sum equals d_N(k,l,r) (both on the
/// boundary of the case split).
std::vector<Parity> select_case(const Params& params);

struct GroupedContribution {
  RationalFn closed;
  RationalFn sum4;
};

/// Closed form of the merged vertex M'_{m,n} at l = r = k.
RationalFn grouped_closed_form(int N, int k, int m, int n);

/// Closed form together with sum_{i,j in {0,1}} d^{2m-i,2n-j}_N(k,k,k).
GroupedContribution grouped_contribution(int N, int k, int m, int n);

/// Sum over m + n <= N/2 of the grouped closed forms, expanded to `cutoff`.
Series andrews_gordon_rhs(int N, int k, int cutoff);

struct AndrewsGordonResult {
  bool passed = false;
  LaurentPoly lhs;  // fermionic side at l = r = k
  Series rhs;
  std::optional<CoefficientDiff> difference;
};

AndrewsGordonResult andrews_gordon_check(int N, int k, int cutoff);

struct SupportBox {
  int min_q = 0;
  int max_q = 0;
  int min_z = 0;
  int max_z = 0;
};

struct SingularContribution {
  RationalFn dM;
  /// Factors left in the denominator of dM * prod_{i=1}^N (1 - q^{-i} z^{-1})
  /// after cancelling common factors.
  std::vector<BinomialFactor> residual_denominator;
  /// Numerator before the exact divisions.
  LaurentPoly cleared_numerator;
  std::optional<LaurentPoly> P;
  std::optional<SupportBox> support;
};

/// Contribution of the singular vertex for odd N: the sum of d^{i,j}_N(k,k,k)
/// over i + j = N with i even, and the candidate numerator P_N over
/// prod_{i=1}^N (1 - q^{-i} z^{-1}) when all divisions are exact.
SingularContribution singular_contribution(int N, int k);

/// expand_rational(dM) against the sum of the vertex series, through cutoff.
std::optional<CoefficientDiff> singular_consistency(int N, int k, const RationalFn& dM, int cutoff);

}  // namespace agpoly::bosonic
