#include "agpoly/fermionic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace agpoly::fermionic {

namespace {

std::mutex binomial_mutex;
std::map<std::pair<int, int>, LaurentPoly> binomial_cache;

LaurentPoly compute_binomial(int n, int m) {
  // [n, m] = [n-1, m-1] + q^m [n-1, m]; rows built bottom-up.
  std::vector<LaurentPoly> row(m + 1);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, m); j >= 1; --j) {
      // row[j] currently holds [i-1, j]
      row[j] = row[j - 1] + row[j].shifted(j, 0);
    }
  }
  return row[m];
}

}  // namespace

LaurentPoly gaussian_binomial(int n, int m) {
  if (m < 0 || n < 0 || m > n) return {};
  if (m == 0 || m == n) return 1;
  m = std::min(m, n - m);
  std::lock_guard lock(binomial_mutex);
  auto it = binomial_cache.find({n, m});
  if (it != binomial_cache.end()) return it->second;
  return binomial_cache.emplace(std::pair{n, m}, compute_binomial(n, m)).first->second;
}

GordonData gordon_data(int k, int l, int r) {
  if (k < 0 || l < 0 || r < 0) throw UsageError("gordon_data requires k, l, r >= 0");
  GordonData g;
  g.k = k;
  g.Q.assign(k, std::vector<int>(k));
  g.L.resize(k);
  g.R.resize(k);
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) g.Q[i - 1][j - 1] = std::min(i, j);
    g.L[i - 1] = std::max(i - l, 0);
    g.R[i - 1] = std::max(i - r, 0);
  }
  return g;
}

namespace {

struct Summation {
  int N;
  GordonData data;

  // (N+1)i - (2Qv + L + R - v)_i for 1-based i = idx + 1.
  long top(const std::vector<int>& v, int idx) const {
    long qv = 0;
    for (int j = 0; j < data.k; ++j) qv += static_cast<long>(data.Q[idx][j]) * v[j];
    return static_cast<long>(N + 1) * (idx + 1) - (2 * qv + data.L[idx] + data.R[idx] - v[idx]);
  }

  LaurentPoly summand(const std::vector<int>& v) const {
    long q_exp = 0;
    long z_exp = 0;
    for (int i = 0; i < data.k; ++i) {
      for (int j = 0; j < data.k; ++j) q_exp += static_cast<long>(v[i]) * data.Q[i][j] * v[j];
      q_exp += static_cast<long>(data.L[i]) * v[i];
      z_exp += static_cast<long>(i + 1) * v[i];
    }
    LaurentPoly term = LaurentPoly::monomial(static_cast<int>(q_exp), static_cast<int>(z_exp));
    for (int i = 0; i < data.k; ++i) {
      const long n = top(v, i);
      if (n < v[i]) return {};
      term *= gaussian_binomial(static_cast<int>(n), v[i]);
    }
    return term;
  }

  bool feasible(const std::vector<int>& v) const {
    for (int i = 0; i < data.k; ++i) {
      if (top(v, i) < v[i]) return false;
    }
    return true;
  }

  // Every top is decreasing in every component, so once a partial vector
  // (unset entries zero) is infeasible, all its extensions are too.
  void visit(std::vector<int>& v, int idx, LaurentPoly& acc) const {
    if (idx == data.k) {
      acc += summand(v);
      return;
    }
    const int bound = (N + 1) * (idx + 1);
    for (int value = 0; value <= bound; ++value) {
      v[idx] = value;
      if (!feasible(v)) break;
      visit(v, idx + 1, acc);
    }
    v[idx] = 0;
  }
};

}  // namespace

LaurentPoly fermionic_sum(const Params& params) {
  require_basis_params(params);
  Summation s{params.N, gordon_data(params.k, params.l, params.r)};
  std::vector<int> v(params.k, 0);
  LaurentPoly acc;
  s.visit(v, 0, acc);
  return acc;
}

LaurentPoly fermionic_sum_bounded(const Params& params, const std::vector<int>& bounds) {
  require_basis_params(params);
  if (static_cast<int>(bounds.size()) != params.k) throw UsageError("one bound per component required");
  Summation s{params.N, gordon_data(params.k, params.l, params.r)};
  std::vector<int> v(params.k, 0);
  LaurentPoly acc;
  while (true) {
    acc += s.summand(v);
    int idx = 0;
    while (idx < params.k && v[idx] == bounds[idx]) v[idx++] = 0;
    if (idx == params.k) break;
    ++v[idx];
  }
  return acc;
}

LaurentPoly fermionic_summand(const Params& params, std::span<const int> v) {
  require_basis_params(params);
  if (static_cast<int>(v.size()) != params.k) throw UsageError("summation vector must have length k");
  Summation s{params.N, gordon_data(params.k, params.l, params.r)};
  return s.summand(std::vector<int>(v.begin(), v.end()));
}

LaurentPoly andrews_gordon_summand(int N, std::span<const int> v) {
  const int k = static_cast<int>(v.size());
  long q_exp = 0;
  long z_exp = 0;
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) q_exp += static_cast<long>(v[i - 1]) * v[j - 1] * std::min(i, j);
    z_exp += static_cast<long>(i) * v[i - 1];
  }
  LaurentPoly term = LaurentPoly::monomial(static_cast<int>(q_exp), static_cast<int>(z_exp));
  for (int i = 1; i <= k && !term.is_zero(); ++i) {
    long weighted = 0;
    for (int j = 1; j <= k; ++j) weighted += static_cast<long>(v[j - 1]) * std::min(i, j);
    term *= gaussian_binomial(static_cast<int>((N + 1) * i - 2 * weighted + v[i - 1]), v[i - 1]);
  }
  return term;
}

LaurentPoly andrews_gordon_lhs(int N, int k) {
  if (N < 2 || k < 0) throw UsageError("andrews_gordon_lhs requires N >= 2, k >= 0");
  std::vector<int> v(k, 0);
  LaurentPoly acc;
  while (true) {
    acc += andrews_gordon_summand(N, v);
    int idx = 0;
    while (idx < k && v[idx] == (N + 1) * (idx + 1)) v[idx++] = 0;
    if (idx == k) break;
    ++v[idx];
  }
  return acc;
}

}  // namespace agpoly::fermionic
