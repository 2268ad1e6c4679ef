#include "agpoly/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <thread>

#include "agpoly/bosonic.hpp"
#include "agpoly/fermionic.hpp"
#include "agpoly/polyhedral.hpp"
#include "agpoly/quotient_oracle.hpp"

namespace agpoly::verify {

using bosonic::Parity;

namespace {

constexpr std::pair<Suite, const char*> kSuiteNames[] = {
    {Suite::crosscheck, "crosscheck"}, {Suite::stp, "stp"},
    {Suite::recursion, "recursion"},   {Suite::symmetry, "symmetry"},
    {Suite::lemmas, "lemmas"},         {Suite::grouped, "grouped"},
    {Suite::andrews_gordon, "andrews-gordon"}, {Suite::conjecture, "conjecture"},
};

std::string label_of(const Params& p) { return p.to_string(); }

std::string label_of(int N, int k) { return "N=" + std::to_string(N) + " k=" + std::to_string(k); }

int cutoff_for(const Params& p, const Options& opts) {
  return opts.cutoff ? *opts.cutoff : polyhedral::default_cutoff(p);
}

/// Records the first mismatch between two polynomials; returns true on agreement.
bool expect_equal(PointResult& result, const std::string& what, const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (auto diff = first_difference(lhs, rhs)) {
    result.passed = false;
    if (result.detail.empty()) result.detail = what + ": " + describe(*diff);
    return false;
  }
  return true;
}

bool expect_equal_through(PointResult& result, const std::string& what, const LaurentPoly& lhs,
                          const LaurentPoly& rhs, int cutoff) {
  return expect_equal(result, what, lhs.truncated(cutoff), rhs.truncated(cutoff));
}

void expect(PointResult& result, const std::string& what, bool ok) {
  if (!ok) {
    result.passed = false;
    if (result.detail.empty()) result.detail = what;
  }
}

std::string vertex_name(const char* prefix, int m, int n) {
  return std::string(prefix) + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

}  // namespace

Suite parse_suite(std::string_view name) {
  for (const auto& [suite, text] : kSuiteNames) {
    if (name == text) return suite;
  }
  throw UsageError("unknown suite '" + std::string(name) + "'");
}

const char* to_string(Suite suite) {
  for (const auto& [s, text] : kSuiteNames) {
    if (s == suite) return text;
  }
  return "?";
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [suite, text] : kSuiteNames) out.emplace_back(text);
  return out;
}

PointResult check_crosscheck(const Params& p, const Options& opts) {
  PointResult result;
  result.label = label_of(p);
  const LaurentPoly enumeration = polyhedral::hilbert_by_enumeration(p);
  expect_equal(result, "fermionic vs enumeration", fermionic::fermionic_sum(p), enumeration);
  expect_equal(result, "transfer vs enumeration", polyhedral::hilbert_by_transfer(p), enumeration);
  expect(result, "basis size vs d(1,1)",
         Integer(polyhedral::enumerate_basis(p).size()) == enumeration.evaluate_at_one());
  if (opts.with_oracle) {
    const int qbound = polyhedral::degree_bounds(p).maxdeg_q;
    expect_equal(result, "quotient oracle vs enumeration", quotient::hilbert_by_quotient(p, qbound), enumeration);
  }
  result.data["dimension"] = enumeration.evaluate_at_one().get_str();
  return result;
}

PointResult check_stp(const Params& p, const Options& opts) {
  PointResult result;
  result.label = label_of(p);
  const int cutoff = cutoff_for(p, opts);
  const LaurentPoly expected = polyhedral::hilbert_by_transfer(p);
  nlohmann::json parities = nlohmann::json::array();
  for (Parity parity : bosonic::select_case(p)) {
    parities.push_back(bosonic::to_string(parity));
    const Series sum = bosonic::bosonic_sum(p, parity, cutoff);
    expect_equal_through(result, std::string("d^") + (parity == Parity::even ? "e" : "o") + " vs d_N", sum.poly(),
                         expected, cutoff);
  }
  result.data["parities"] = parities;
  result.data["cutoff"] = cutoff;
  return result;
}

PointResult check_recursion(const Params& p, const Options&) {
  PointResult result;
  result.label = label_of(p);
  expect_equal(result, "d_N vs recursion", polyhedral::hilbert_by_transfer(p), polyhedral::recursion_rhs(p));
  return result;
}

PointResult check_symmetry(const Params& p, const Options&) {
  PointResult result;
  result.label = label_of(p);
  expect(result, "reflection e_i -> e_{N+1-i}", polyhedral::reflect_check(p));
  if (p.N >= 3) {
    // dropping the last coordinate of the r = 0 basis gives the r = k basis of N - 1
    std::vector<polyhedral::ExponentVector> projected;
    for (auto v : polyhedral::enumerate_basis(Params{p.N, p.k, p.l, 0})) {
      v.a.pop_back();
      projected.push_back(std::move(v));
    }
    expect(result, "basis(N,k,l,0) projected vs basis(N-1,k,l,k)",
           projected == polyhedral::enumerate_basis(Params{p.N - 1, p.k, p.l, p.k}));
  }
  return result;
}

PointResult check_lemma_vertex_recursion(const Params& p, const Options& opts) {
  PointResult result;
  result.label = label_of(p);
  const int cutoff = cutoff_for(p, opts);
  const Params lower{p.N, p.k, p.l, p.r - 1};
  const Params shorter{p.N - 1, p.k, p.l, p.k - p.r};
  const bool shift_ok = p.r >= 0;
  for (int m = 0; m <= p.N; ++m) {
    for (int n = 0; m + n <= p.N; ++n) {
      const Series lhs = bosonic::vertex_series(p, m, n, cutoff);
      Series rhs = bosonic::vertex_series(lower, m, n, cutoff);
      if (n > 0 && shift_ok) rhs += bosonic::vertex_series(shorter, m, n - 1, cutoff).shifted(p.N * p.r, p.r);
      expect_equal(result, vertex_name("per-vertex recursion", m, n), lhs.poly(), rhs.poly());
    }
  }
  for (Parity parity : {Parity::even, Parity::odd}) {
    const Series lhs = bosonic::bosonic_sum(p, parity, cutoff);
    const Series rhs = bosonic::bosonic_sum(lower, parity, cutoff) +
                       bosonic::bosonic_sum(shorter, parity, cutoff).shifted(p.N * p.r, p.r);
    expect_equal(result, std::string("aggregated recursion ") + bosonic::to_string(parity), lhs.poly(), rhs.poly());
  }
  return result;
}

PointResult check_lemma_vanishing(const Params& p, const Options& opts) {
  PointResult result;
  result.label = label_of(p);
  const int cutoff = cutoff_for(p, opts);
  const Params at_minus_one{p.N, p.k, p.l, -1};
  const Parity vanishing = p.N % 2 == 1 ? Parity::even : Parity::odd;
  expect_equal(result, std::string("d^") + bosonic::to_string(vanishing) + " at r=-1",
               bosonic::bosonic_sum(at_minus_one, vanishing, cutoff).poly(), LaurentPoly{});
  for (int m = 0; m <= p.N; ++m) {
    for (int n = 0; m + 2 * n + 1 <= p.N; ++n) {
      const Series even_term = bosonic::vertex_series(at_minus_one, m, 2 * n, cutoff);
      const Series odd_term = bosonic::vertex_series(at_minus_one, m, 2 * n + 1, cutoff);
      expect_equal(result, vertex_name("pairwise cancellation", m, 2 * n), even_term.poly(), -odd_term.poly());
    }
  }
  return result;
}

PointResult check_lemma_boundary(const Params& p, const Options& opts) {
  PointResult result;
  result.label = label_of(p);
  if (p.N % 2 != 0 || p.l + p.r != p.k) {
    result.detail = "not applicable";
    return result;
  }
  const int cutoff = cutoff_for(p, opts);
  expect_equal(result, "d^e vs d^o at l+r=k", bosonic::bosonic_sum(p, Parity::even, cutoff).poly(),
               bosonic::bosonic_sum(p, Parity::odd, cutoff).poly());
  return result;
}

PointResult check_lemmas(const Params& p, const Options& opts) {
  PointResult result;
  result.label = label_of(p);
  for (const auto& part :
       {check_lemma_vertex_recursion(p, opts), check_lemma_vanishing(p, opts), check_lemma_boundary(p, opts)}) {
    if (!part.passed) expect(result, part.detail, false);
  }
  return result;
}

PointResult check_grouped(int N, int k) {
  PointResult result;
  result.label = label_of(N, k);
  int count = 0;
  for (int m = 0; 2 * m <= N; ++m) {
    for (int n = 0; 2 * (m + n) <= N; ++n) {
      const auto g = bosonic::grouped_contribution(N, k, m, n);
      expect(result, vertex_name("closed form vs four-term sum at", m, n), g.closed == g.sum4);
      ++count;
    }
  }
  result.data["vertices"] = count;
  return result;
}

PointResult check_andrews_gordon(int N, int k, const Options& opts) {
  PointResult result;
  result.label = label_of(N, k);
  const int cutoff = opts.cutoff ? *opts.cutoff : polyhedral::default_cutoff(Params{N, k, k, k});
  const auto check = bosonic::andrews_gordon_check(N, k, cutoff);
  if (!check.passed) expect(result, "fermionic vs grouped vertex sum: " + describe(*check.difference), false);
  result.data["cutoff"] = cutoff;
  return result;
}

PointResult check_conjecture(int N, int k, const Options& opts) {
  PointResult result;
  result.label = label_of(N, k);
  const int cutoff = opts.cutoff ? *opts.cutoff : polyhedral::default_cutoff(Params{N, k, k, k});
  const auto singular = bosonic::singular_contribution(N, k);
  if (auto diff = bosonic::singular_consistency(N, k, singular.dM, cutoff)) {
    expect(result, "expanded d_M' vs summed vertex series: " + describe(*diff), false);
  }
  auto& data = result.data;
  data["cutoff"] = cutoff;
  data["dM"] = rational_to_json(singular.dM);
  nlohmann::json residual = nlohmann::json::array();
  for (const auto& f : singular.residual_denominator) residual.push_back(nlohmann::json::array({f.a(), f.b()}));
  data["residual_denominator"] = residual;
  data["divisible"] = singular.P.has_value();
  if (singular.P) {
    data["P"] = poly_to_json(*singular.P);
    if (singular.support) {
      data["support"] = {{"min_q", singular.support->min_q},
                         {"max_q", singular.support->max_q},
                         {"min_z", singular.support->min_z},
                         {"max_z", singular.support->max_z}};
    }
    if (result.passed) result.detail = "P_N = " + singular.P->to_text();
  } else {
    result.divisibility_failed = true;
    if (result.passed) result.detail = "not divisible";
  }
  return result;
}

std::vector<Params> applicable_points(Suite suite, const std::vector<Params>& grid) {
  std::vector<Params> out;
  std::set<std::pair<int, int>> seen;
  for (const auto& p : grid) {
    switch (suite) {
      case Suite::recursion:
        if (p.N >= 3 && p.r >= 1) out.push_back(p);
        break;
      case Suite::grouped:
      case Suite::andrews_gordon:
      case Suite::conjecture: {
        if (suite == Suite::andrews_gordon && p.N % 2 != 0) break;
        if (suite == Suite::conjecture && (p.N % 2 == 0 || p.N < 3)) break;
        if (seen.insert({p.N, p.k}).second) out.push_back(Params{p.N, p.k, p.k, p.k});
        break;
      }
      default:
        out.push_back(p);
    }
  }
  return out;
}

namespace {

PointResult run_point(Suite suite, const Params& p, const Options& opts) {
  switch (suite) {
    case Suite::crosscheck:
      return check_crosscheck(p, opts);
    case Suite::stp:
      return check_stp(p, opts);
    case Suite::recursion:
      return check_recursion(p, opts);
    case Suite::symmetry:
      return check_symmetry(p, opts);
    case Suite::lemmas:
      return check_lemmas(p, opts);
    case Suite::grouped:
      return check_grouped(p.N, p.k);
    case Suite::andrews_gordon:
      return check_andrews_gordon(p.N, p.k, opts);
    case Suite::conjecture:
      return check_conjecture(p.N, p.k, opts);
  }
  return {};
}

}  // namespace

SuiteReport run_suite(Suite suite, const std::vector<Params>& grid, const Options& opts) {
  const auto points = applicable_points(suite, grid);
  if (points.empty()) throw UsageError(std::string("grid has no points for suite ") + to_string(suite));
  for (const auto& p : points) {
    if (suite == Suite::grouped || suite == Suite::andrews_gordon || suite == Suite::conjecture) {
      if (p.k < 0) throw UsageError("k >= 0 required (" + p.to_string() + ")");
    } else {
      require_basis_params(p);
      if (p.l > p.k || p.r > p.k) throw UsageError("l, r <= k required (" + p.to_string() + ")");
    }
  }

  std::vector<PointResult> results(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        results[i] = run_point(suite, points[i], opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(points.size()));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return SuiteReport{to_string(suite), std::move(results)};
}

}  // namespace agpoly::verify
