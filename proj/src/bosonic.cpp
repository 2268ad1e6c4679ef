#include "agpoly/bosonic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "agpoly/fermionic.hpp"

namespace agpoly::bosonic {

const char* to_string(Parity parity) { return parity == Parity::even ? "even" : "odd"; }

PhiPair phi_of(const std::vector<int>& x) {
  int q = 0;
  int z = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    q += static_cast<int>(i + 1) * x[i];
    z += x[i];
  }
  return {q, z};
}

namespace {

void require_vertex_index(int N, int m, int n) {
  if (m < 0 || n < 0 || m + n > N) {
    throw UsageError("vertex index requires m, n >= 0 and m + n <= N (N=" + std::to_string(N) +
                     " m=" + std::to_string(m) + " n=" + std::to_string(n) + ")");
  }
}

bool is_even(int x) { return x % 2 == 0; }

}  // namespace

std::vector<int> vertex_coordinates(const Params& params, int m, int n) {
  require_vertex_index(params.N, m, n);
  const int N = params.N;
  std::vector<int> x(N, 0);
  for (int p = 1; p <= m; ++p) x[p - 1] = is_even(p) ? params.k - params.l : params.l;
  for (int p = N - n + 1; p <= N; ++p) x[p - 1] = is_even(N - p) ? params.r : params.k - params.r;
  return x;
}

std::vector<std::vector<int>> cone_generators(int N, int m, int n) {
  require_vertex_index(N, m, n);
  std::vector<std::vector<int>> gens(N, std::vector<int>(N, 0));
  for (int i = 1; i <= N; ++i) {
    auto& v = gens[i - 1];
    if (i <= m) {
      // (-1)^t at position m - i + t, t = 1..i
      for (int t = 1; t <= i; ++t) v[m - i + t - 1] = is_even(t) ? 1 : -1;
    } else if (i <= N - n) {
      v[i - 1] = 1;
    } else {
      // block of length j = N - i + 1 starting after position N - n, ending in -1
      const int j = N - i + 1;
      for (int t = 1; t <= j; ++t) v[N - n + t - 1] = is_even(j - t + 1) ? 1 : -1;
    }
  }
  return gens;
}

PhiPair generator_phi_table(int N, int m, int n, int i) {
  require_vertex_index(N, m, n);
  if (i < 1 || i > N) throw UsageError("generator index out of range");
  if (i <= m) return is_even(i) ? PhiPair{i / 2, 0} : PhiPair{(i - 1) / 2 - m, -1};
  if (i <= N - n) return {i, 1};
  if (is_even(N - i)) return {n - 1 - (3 * N - i) / 2, -1};
  return {-(N - i + 1) / 2, 0};
}

std::vector<std::pair<int, int>> vertex_denominator(int N, int m, int n) {
  require_vertex_index(N, m, n);
  std::vector<std::pair<int, int>> out;
  out.reserve(N);
  for (int i = 1; i <= m / 2; ++i) out.emplace_back(i, 0);
  for (int i = m / 2 + 1; i <= m; ++i) out.emplace_back(-i, -1);
  for (int i = m + 1; i <= N - n; ++i) out.emplace_back(i, 1);
  for (int i = 1; i <= n / 2; ++i) out.emplace_back(-i, 0);
  for (int i = n / 2 + 1; i <= n; ++i) out.emplace_back(i - N - 1, -1);
  return out;
}

RationalFn vertex_rational(const Params& params, int m, int n) {
  if (m < 0 || n < 0) return RationalFn{};
  require_vertex_params(params);
  const auto [phi_q, phi_z] = phi_of(vertex_coordinates(params, m, n));
  const auto factors = vertex_denominator(params.N, m, n);
  return RationalFn::from_raw_factors(LaurentPoly::monomial(phi_q, phi_z), factors);
}

VertexContribution vertex_contribution(const Params& params, int m, int n) {
  require_vertex_params(params);
  VertexContribution out;
  out.m = m;
  out.n = n;
  out.coordinates = vertex_coordinates(params, m, n);
  out.generators = cone_generators(params.N, m, n);
  std::tie(out.phi_q_M, out.phi_z_M) = phi_of(out.coordinates);
  out.rational = vertex_rational(params, m, n);

  std::vector<PhiPair> from_generators;
  for (const auto& v : out.generators) from_generators.push_back(phi_of(v));
  auto from_formula = vertex_denominator(params.N, m, n);
  std::sort(from_generators.begin(), from_generators.end());
  std::sort(from_formula.begin(), from_formula.end());
  if (from_generators != from_formula) {
    throw std::logic_error("cone generator exponents disagree with the vertex denominator at m=" +
                           std::to_string(m) + " n=" + std::to_string(n));
  }
  return out;
}

Series vertex_series(const Params& params, int m, int n, int cutoff) {
  if (m < 0 || n < 0) return Series(LaurentPoly{}, cutoff);
  const RationalFn rational = vertex_rational(params, m, n);
  for (const auto& f : rational.denominator()) {
    if (!(f.a() >= f.b() && f.b() >= 0)) {
      throw std::logic_error("vertex factor (" + std::to_string(f.a()) + ", " + std::to_string(f.b()) +
                             ") violates q-exponent >= z-exponent >= 0");
    }
  }
  return expand_rational(rational, cutoff);
}

bool vertex_in_sum(int N, int m, int n, Parity parity) {
  if (m < 0 || n < 0 || m + n > N) return false;
  if (m + n < N) return true;
  return is_even(m) == (parity == Parity::even);
}

Series bosonic_sum(const Params& params, Parity parity, int cutoff) {
  require_vertex_params(params);
  Series total(LaurentPoly{}, cutoff);
  for (int m = 0; m <= params.N; ++m) {
    for (int n = 0; m + n <= params.N; ++n) {
      if (vertex_in_sum(params.N, m, n, parity)) total += vertex_series(params, m, n, cutoff);
    }
  }
  return total;
}

std::vector<Parity> select_case(const Params& params) {
  bool even = false;
  bool odd = false;
  if (!is_even(params.N)) {
    odd = params.l <= params.r;
    even = params.l >= params.r;
  } else {
    odd = params.l + params.r <= params.k;
    even = params.l + params.r >= params.k;
  }
  std::vector<Parity> out;
  if (even) out.push_back(Parity::even);
  if (odd) out.push_back(Parity::odd);
  return out;
}

RationalFn grouped_closed_form(int N, int k, int m, int n) {
  if (m < 0 || n < 0 || 2 * (m + n) > N) {
    throw UsageError("grouped vertex requires m, n >= 0 and 2(m + n) <= N");
  }
  std::vector<std::pair<int, int>> factors;
  for (int i = 1; i <= m; ++i) {
    factors.emplace_back(i, 0);
    factors.emplace_back(-i - m + 1, -1);
  }
  for (int i = 2 * m + 1; i <= N - 2 * n; ++i) factors.emplace_back(i, 1);
  for (int i = 1; i <= n; ++i) {
    factors.emplace_back(-i, 0);
    factors.emplace_back(-N + i + n - 2, -1);
  }
  const LaurentPoly numerator = LaurentPoly::monomial(k * (m * m + (N + 1) * n - n * n), k * (m + n));
  return RationalFn::from_raw_factors(numerator, factors);
}

GroupedContribution grouped_contribution(int N, int k, int m, int n) {
  GroupedContribution out{grouped_closed_form(N, k, m, n), RationalFn{}};
  const Params diagonal{N, k, k, k};
  for (int i = 0; i <= 1; ++i) {
    for (int j = 0; j <= 1; ++j) out.sum4 = out.sum4 + vertex_rational(diagonal, 2 * m - i, 2 * n - j);
  }
  return out;
}

Series andrews_gordon_rhs(int N, int k, int cutoff) {
  if (N < 2 || !is_even(N)) throw UsageError("identity check requires even N >= 2");
  Series total(LaurentPoly{}, cutoff);
  for (int m = 0; 2 * m <= N; ++m) {
    for (int n = 0; 2 * (m + n) <= N; ++n) total += expand_rational(grouped_closed_form(N, k, m, n), cutoff);
  }
  return total;
}

AndrewsGordonResult andrews_gordon_check(int N, int k, int cutoff) {
  AndrewsGordonResult out;
  out.rhs = andrews_gordon_rhs(N, k, cutoff);
  out.lhs = fermionic::fermionic_sum(Params{N, k, k, k});
  out.difference = first_difference_through(out.lhs, out.rhs.poly(), cutoff);
  out.passed = !out.difference.has_value();
  return out;
}

SingularContribution singular_contribution(int N, int k) {
  if (N < 3 || is_even(N)) throw UsageError("singular vertex requires odd N >= 3");
  if (k < 0) throw UsageError("singular vertex requires k >= 0");
  SingularContribution out;
  const Params diagonal{N, k, k, k};
  for (int i = 0; i <= N; i += 2) out.dM = out.dM + vertex_rational(diagonal, i, N - i);

  // prod_{i=1}^N (1 - q^{-i} z^{-1}) = (-1)^N q^{-N(N+1)/2} z^{-N} prod_{i=1}^N (1 - q^i z)
  std::vector<BinomialFactor> target;
  for (int i = 1; i <= N; ++i) target.emplace_back(i, 1);
  std::sort(target.begin(), target.end());
  out.residual_denominator = factor_difference(out.dM.denominator(), target);
  LaurentPoly numerator = out.dM.full_numerator().shifted(-N * (N + 1) / 2, -N);
  if (!is_even(N)) numerator = -numerator;
  for (const auto& f : factor_difference(target, out.dM.denominator())) numerator *= f.as_poly();
  out.cleared_numerator = numerator;

  std::optional<LaurentPoly> quotient = numerator;
  for (const auto& f : out.residual_denominator) {
    quotient = divide_exact(*quotient, f);
    if (!quotient) break;
  }
  out.P = quotient;
  if (quotient && !quotient->is_zero()) {
    out.support = SupportBox{*quotient->min_q(), *quotient->max_q(), *quotient->min_z(), *quotient->max_z()};
  }
  return out;
}

std::optional<CoefficientDiff> singular_consistency(int N, int k, const RationalFn& dM, int cutoff) {
  const Params diagonal{N, k, k, k};
  Series summed(LaurentPoly{}, cutoff);
  for (int i = 0; i <= N; i += 2) summed += vertex_series(diagonal, i, N - i, cutoff);
  return first_difference_through(expand_rational(dM, cutoff).poly(), summed.poly(), cutoff);
}

}  // namespace agpoly::bosonic
