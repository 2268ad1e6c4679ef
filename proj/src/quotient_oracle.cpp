#include "agpoly/quotient_oracle.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace agpoly::quotient {

namespace {

void collect_monomials(int N, int s, int q_left, int z_left, Monomial& a, std::vector<Monomial>& out) {
  // s runs from 1 to N; a[s-1] is chosen here
  if (s > N) {
    if (q_left == 0 && z_left == 0) out.push_back(a);
    return;
  }
  for (int count = 0; count * s <= q_left && count <= z_left; ++count) {
    a[s - 1] = count;
    collect_monomials(N, s + 1, q_left - count * s, z_left - count, a, out);
  }
  a[s - 1] = 0;
}

Integer factorial(int n) {
  Integer out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

HomogeneousPoly power_of_variable(int N, int s, int exponent) {
  HomogeneousPoly g;
  Monomial a(N, 0);
  a[s - 1] = exponent;
  g.terms.emplace(a, 1);
  g.deg_q = s * exponent;
  g.deg_z = exponent;
  return g;
}

}  // namespace

std::vector<Monomial> monomials_of_bidegree(int N, int i, int j) {
  std::vector<Monomial> out;
  if (i < 0 || j < 0) return out;
  Monomial a(N, 0);
  collect_monomials(N, 1, i, j, a, out);
  std::sort(out.begin(), out.end());
  return out;
}

IdealGeneratorSet ideal_generators(const Params& params) {
  require_basis_params(params);
  const int N = params.N;
  const int power = params.k + 1;
  IdealGeneratorSet ideal;
  ideal.generators.push_back(power_of_variable(N, 1, params.l + 1));
  ideal.generators.push_back(power_of_variable(N, N, params.r + 1));
  // coefficient of t^i in e(t)^{k+1}: each multiset of indices appears
  // (k+1)! / prod a_s! times among ordered tuples
  const Integer total = factorial(power);
  for (int i = power; i <= N * power; ++i) {
    HomogeneousPoly g;
    g.deg_q = i;
    g.deg_z = power;
    for (const auto& a : monomials_of_bidegree(N, i, power)) {
      Integer coeff = total;
      for (int count : a) coeff /= factorial(count);
      g.terms.emplace(a, coeff);
    }
    ideal.generators.push_back(std::move(g));
  }
  return ideal;
}

std::vector<std::vector<Integer>> ideal_span_matrix(const IdealGeneratorSet& ideal, int N, int i, int j,
                                                    const std::vector<Monomial>& columns) {
  std::map<Monomial, std::size_t> column_of;
  for (std::size_t c = 0; c < columns.size(); ++c) column_of.emplace(columns[c], c);

  std::set<std::vector<Integer>> rows;
  for (const auto& g : ideal.generators) {
    for (const auto& multiplier : monomials_of_bidegree(N, i - g.deg_q, j - g.deg_z)) {
      std::vector<Integer> row(columns.size());
      for (const auto& [mono, coeff] : g.terms) {
        Monomial product = mono;
        for (int s = 0; s < N; ++s) product[s] += multiplier[s];
        row[column_of.at(product)] += coeff;
      }
      rows.insert(std::move(row));
    }
  }
  return {rows.begin(), rows.end()};
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b) { return static_cast<u64>(static_cast<u128>(a) * b % kModulus); }

u64 pow_mod(u64 base, u64 exp) {
  u64 out = 1;
  while (exp > 0) {
    if (exp & 1) out = mul_mod(out, base);
    base = mul_mod(base, base);
    exp >>= 1;
  }
  return out;
}

u64 reduce(const Integer& x) {
  Integer r = x % Integer(static_cast<unsigned long>(kModulus));
  if (r < 0) r += static_cast<unsigned long>(kModulus);
  return r.get_ui();
}

}  // namespace

std::size_t rank_mod_prime(const std::vector<std::vector<Integer>>& rows, std::size_t columns) {
  std::vector<std::vector<u64>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<u64> r(columns);
    for (std::size_t c = 0; c < columns; ++c) r[c] = reduce(row[c]);
    m.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < columns && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    const u64 inv = pow_mod(m[rank][col], kModulus - 2);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      const u64 factor = mul_mod(m[r][col], inv);
      for (std::size_t c = col; c < columns; ++c) {
        const u64 sub = mul_mod(factor, m[rank][c]);
        m[r][c] = m[r][c] >= sub ? m[r][c] - sub : m[r][c] + kModulus - sub;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(const std::vector<std::vector<Integer>>& rows, std::size_t columns) {
  // Fraction-free (Bareiss) elimination keeps every entry integral.
  auto m = rows;
  std::size_t rank = 0;
  Integer previous = 1;
  for (std::size_t col = 0; col < columns && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      for (std::size_t c = col + 1; c < columns; ++c) {
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / previous;
      }
      m[r][col] = 0;
    }
    previous = m[rank][col];
    ++rank;
  }
  return rank;
}

long graded_dimension(const Params& params, int i, int j, Field field) {
  require_basis_params(params);
  if (i < 0 || j < 0) throw UsageError("bidegree must be nonnegative");
  const auto columns = monomials_of_bidegree(params.N, i, j);
  if (columns.empty()) return 0;
  const auto rows = ideal_span_matrix(ideal_generators(params), params.N, i, j, columns);
  const std::size_t rank =
      field == Field::prime ? rank_mod_prime(rows, columns.size()) : rank_rational(rows, columns.size());
  return static_cast<long>(columns.size() - rank);
}

LaurentPoly hilbert_by_quotient(const Params& params, int qbound, Field field) {
  require_basis_params(params);
  const auto ideal = ideal_generators(params);
  LaurentPoly out;
  for (int i = 0; i <= qbound; ++i) {
    for (int j = 0; j <= i; ++j) {
      const auto columns = monomials_of_bidegree(params.N, i, j);
      if (columns.empty()) continue;
      const auto rows = ideal_span_matrix(ideal, params.N, i, j, columns);
      const std::size_t rank =
          field == Field::prime ? rank_mod_prime(rows, columns.size()) : rank_rational(rows, columns.size());
      out.add_term({i, j}, static_cast<long>(columns.size() - rank));
    }
  }
  return out;
}

}  // namespace agpoly::quotient
