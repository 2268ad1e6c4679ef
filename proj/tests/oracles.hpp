#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library code paths under test.

#include <random>
#include <vector>

#include "agpoly/laurent_poly.hpp"

namespace oracle {

/// Every vector in {0..k}^N that satisfies a_1 <= l, a_N <= r and
/// a_i + a_{i+1} <= k, in lexicographic order (odometer over the full box).
inline std::vector<std::vector<int>> admissible_vectors(int N, int k, int l, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(N, 0);
  while (true) {
    bool ok = a[0] <= l && a[N - 1] <= r;
    for (int i = 0; i + 1 < N; ++i) ok = ok && a[i] + a[i + 1] <= k;
    if (ok) out.push_back(a);
    int idx = N - 1;
    while (idx >= 0 && a[idx] == k) a[idx--] = 0;
    if (idx < 0) break;
    ++a[idx];
  }
  return out;
}

inline agpoly::LaurentPoly hilbert(int N, int k, int l, int r) {
  agpoly::LaurentPoly out;
  for (const auto& a : admissible_vectors(N, k, l, r)) {
    int q = 0;
    int z = 0;
    for (int i = 0; i < N; ++i) {
      q += (i + 1) * a[i];
      z += a[i];
    }
    out.add_term({q, z}, 1);
  }
  return out;
}

/// Truncated expansion of coeff * q^c z^d * prod 1/(1 - q^a z^b) where each
/// factor is given in the paper orientation and expanded by its own rule:
/// sum_{t >= 0} m^t for (a, b) >= 0 and -sum_{t >= 1} m^{-t} for (a, b) <= 0.
/// Expansion is done by explicit odometer over the exponents t_f.
inline agpoly::LaurentPoly expand_product(long coeff, int c, int d, const std::vector<std::pair<int, int>>& factors,
                                          int cutoff) {
  struct Term {
    int step_q, step_z, first;
    long sign;
  };
  std::vector<Term> terms;
  for (auto [a, b] : factors) {
    if (a >= 0 && b >= 0) {
      terms.push_back({a, b, 0, 1});
    } else {
      terms.push_back({-a, -b, 1, -1});
    }
  }
  agpoly::LaurentPoly out;
  // every step has q-degree >= 1, so t_f * step_q <= cutoff - c bounds each exponent
  const int room = cutoff - c;
  if (room < 0) return out;
  std::vector<int> t(terms.size());
  std::vector<int> top(terms.size());
  for (std::size_t f = 0; f < terms.size(); ++f) {
    t[f] = terms[f].first;
    top[f] = room / terms[f].step_q;
    if (top[f] < t[f]) return out;
  }
  while (true) {
    int q = c;
    int z = d;
    long value = coeff;
    for (std::size_t f = 0; f < terms.size(); ++f) {
      q += t[f] * terms[f].step_q;
      z += t[f] * terms[f].step_z;
      value *= terms[f].sign;
    }
    if (q <= cutoff) out.add_term({q, z}, value);
    std::size_t idx = 0;
    while (idx < terms.size() && t[idx] == top[idx]) {
      t[idx] = terms[idx].first;
      ++idx;
    }
    if (idx == terms.size()) break;
    ++t[idx];
  }
  return out;
}

/// Random Laurent polynomial with small exponents and coefficients.
inline agpoly::LaurentPoly random_poly(std::mt19937& rng, int terms = 4, int span = 3) {
  std::uniform_int_distribution<int> exp(-span, span);
  std::uniform_int_distribution<int> coeff(-5, 5);
  agpoly::LaurentPoly p;
  for (int i = 0; i < terms; ++i) p.add_term({exp(rng), exp(rng)}, coeff(rng));
  return p;
}

}  // namespace oracle
