#include "agpoly/polyhedral.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace agpoly::polyhedral {

int ExponentVector::phi_q() const {
  int sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += static_cast<int>(i + 1) * a[i];
  return sum;
}

int ExponentVector::phi_z() const { return std::accumulate(a.begin(), a.end(), 0); }

bool is_admissible(const ExponentVector& v, const Params& params) {
  const auto& a = v.a;
  if (static_cast<int>(a.size()) != params.N) return false;
  if (std::any_of(a.begin(), a.end(), [](int x) { return x < 0; })) return false;
  if (a.front() > params.l || a.back() > params.r) return false;
  for (int i = 0; i + 1 < params.N; ++i) {
    if (a[i] + a[i + 1] > params.k) return false;
  }
  return true;
}

namespace {

void extend(const Params& p, std::vector<int>& a, int idx, std::vector<ExponentVector>& out) {
  if (idx == p.N) {
    out.push_back({a});
    return;
  }
  int hi = idx == 0 ? std::min(p.l, p.k) : p.k - a[idx - 1];
  if (idx == p.N - 1) hi = std::min(hi, p.r);
  for (int value = 0; value <= hi; ++value) {
    a[idx] = value;
    extend(p, a, idx + 1, out);
  }
  a[idx] = 0;
}

}  // namespace

std::vector<ExponentVector> enumerate_basis(const Params& params) {
  require_basis_params(params);
  std::vector<ExponentVector> out;
  std::vector<int> a(params.N, 0);
  extend(params, a, 0, out);
  return out;
}

LaurentPoly hilbert_by_enumeration(const Params& params) {
  LaurentPoly out;
  for (const auto& v : enumerate_basis(params)) out.add_term({v.phi_q(), v.phi_z()}, 1);
  return out;
}

LaurentPoly hilbert_by_transfer(const Params& params) {
  require_basis_params(params);
  const int k = params.k;
  // state[a] = generating function of admissible prefixes ending in value a
  std::vector<LaurentPoly> state(k + 1);
  for (int a = 0; a <= std::min(params.l, k); ++a) state[a] = LaurentPoly::monomial(a, a);
  for (int pos = 2; pos <= params.N; ++pos) {
    std::vector<LaurentPoly> next(k + 1);
    LaurentPoly prefix;  // sum of state[0..k-b]
    for (int b = k; b >= 0; --b) {
      prefix += state[k - b];
      next[b] = prefix.shifted(pos * b, b);
    }
    state = std::move(next);
  }
  LaurentPoly out;
  for (int a = 0; a <= std::min(params.r, k); ++a) out += state[a];
  return out;
}

LaurentPoly recursion_rhs(const Params& params) {
  require_basis_params(params);
  if (params.r < 1) throw UsageError("recursion requires r >= 1 (" + params.to_string() + ")");
  if (params.N < 3) throw UsageError("recursion requires N >= 3 (" + params.to_string() + ")");
  if (params.r > params.k) throw UsageError("recursion requires r <= k (" + params.to_string() + ")");
  const Params lower{params.N, params.k, params.l, params.r - 1};
  const Params shorter{params.N - 1, params.k, params.l, params.k - params.r};
  return hilbert_by_transfer(lower) + hilbert_by_transfer(shorter).shifted(params.N * params.r, params.r);
}

LaurentPoly reflect(const LaurentPoly& poly, int N) {
  return poly.map_exponents([N](Exponent e) { return Exponent{(N + 1) * e.z - e.q, e.z}; });
}

bool reflect_check(const Params& params) {
  const Params mirrored{params.N, params.k, params.r, params.l};
  return hilbert_by_transfer(params) == reflect(hilbert_by_transfer(mirrored), params.N);
}

DegreeBounds degree_bounds(const Params& params) {
  require_basis_params(params);
  constexpr int unreachable = std::numeric_limits<int>::min() / 4;
  const int k = params.k;
  std::vector<int> best_q(k + 1, unreachable);
  std::vector<int> best_z(k + 1, unreachable);
  for (int a = 0; a <= std::min(params.l, k); ++a) {
    best_q[a] = a;
    best_z[a] = a;
  }
  for (int pos = 2; pos <= params.N; ++pos) {
    std::vector<int> next_q(k + 1, unreachable);
    std::vector<int> next_z(k + 1, unreachable);
    for (int b = 0; b <= k; ++b) {
      for (int a = 0; a + b <= k; ++a) {
        if (best_q[a] == unreachable) continue;
        next_q[b] = std::max(next_q[b], best_q[a] + pos * b);
        next_z[b] = std::max(next_z[b], best_z[a] + b);
      }
    }
    best_q = std::move(next_q);
    best_z = std::move(next_z);
  }
  DegreeBounds out{unreachable, unreachable};
  for (int a = 0; a <= std::min(params.r, k); ++a) {
    out.maxdeg_q = std::max(out.maxdeg_q, best_q[a]);
    out.maxdeg_z = std::max(out.maxdeg_z, best_z[a]);
  }
  return out;
}

int default_cutoff(const Params& params) {
  const Params clamped{params.N, params.k, std::max(params.l, 0), std::max(params.r, 0)};
  return degree_bounds(clamped).maxdeg_q + 2 * (params.N + 1);
}

}  // namespace agpoly::polyhedral
