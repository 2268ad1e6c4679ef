#pragma once

// Verification suites over parameter grids. Each check compares two or more
// independent computations exactly and reports the first differing
// coefficient on failure.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agpoly/params.hpp"
#include "agpoly/report.hpp"

namespace agpoly::verify {

enum class Suite { crosscheck, stp, recursion, symmetry, lemmas, grouped, andrews_gordon, conjecture };

Suite parse_suite(std::string_view name);
const char* to_string(Suite suite);
std::vector<std::string> suite_names();

struct Options {
  /// Include the quotient oracle in crosscheck.
  bool with_oracle = true;
  /// Overrides the default cutoff maxdeg_q + 2(N+1) for series checks.
  std::optional<int> cutoff;
  /// 0 selects the hardware concurrency.
  unsigned threads = 0;
};

/// fermionic == enumeration == transfer (== quotient oracle).
PointResult check_crosscheck(const Params& p, const Options& opts = {});
/// bosonic sums of every selected parity equal the polynomial through the cutoff.
PointResult check_stp(const Params& p, const Options& opts = {});
/// d_N(k,l,r) = d_N(k,l,r-1) + (q^N z)^r d_{N-1}(k,l,k-r).
PointResult check_recursion(const Params& p, const Options& opts = {});
/// Reflection e_i -> e_{N+1-i}, and the r = 0 boundary isomorphism.
PointResult check_symmetry(const Params& p, const Options& opts = {});

/// Per-vertex recursion, and the aggregated forms for both parities.
PointResult check_lemma_vertex_recursion(const Params& p, const Options& opts = {});
/// Vanishing at r = -1: d^e for odd N, d^o for even N, and the pairwise
/// cancellation d^{m,2n} = -d^{m,2n+1}.
PointResult check_lemma_vanishing(const Params& p, const Options& opts = {});
/// d^e = d^o for even N with l + r = k (passes vacuously elsewhere).
PointResult check_lemma_boundary(const Params& p, const Options& opts = {});
PointResult check_lemmas(const Params& p, const Options& opts = {});

/// Closed form == four-term sum for every (m, n) with 2(m+n) <= N.
PointResult check_grouped(int N, int k);
PointResult check_andrews_gordon(int N, int k, const Options& opts = {});
/// Self-consistency of d_{M'} plus the divisibility experiment.
PointResult check_conjecture(int N, int k, const Options& opts = {});

/// Points of the grid the suite applies to, in grid order; (N, k)-only
/// suites are deduplicated on (N, k).
std::vector<Params> applicable_points(Suite suite, const std::vector<Params>& grid);

/// Runs the suite on the grid in parallel; results keep grid order.
SuiteReport run_suite(Suite suite, const std::vector<Params>& grid, const Options& opts = {});

}  // namespace agpoly::verify
