// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "agpoly/bosonic.hpp"
#include "agpoly/grid.hpp"
#include "agpoly/polyhedral.hpp"
#include "agpoly/verify.hpp"

using namespace agpoly;

namespace {

struct Outcome {
  bool passed = true;
  std::string summary;
  std::vector<std::string> notes;
};

Outcome from_reports(std::initializer_list<SuiteReport> reports) {
  Outcome o;
  std::size_t points = 0;
  std::size_t failed = 0;
  for (const auto& report : reports) {
    for (const auto& p : report.points) {
      ++points;
      if (!p.passed) {
        ++failed;
        o.notes.push_back(report.suite + " " + p.label + ": " + p.detail);
      }
    }
  }
  o.passed = failed == 0 && points > 0;
  o.summary = std::to_string(points - failed) + "/" + std::to_string(points) + " points";
  return o;
}

SuiteReport run(verify::Suite suite, const char* grid, bool with_oracle = false) {
  verify::Options opts;
  opts.with_oracle = with_oracle;
  return verify::run_suite(suite, resolve_grid(grid), opts);
}

Outcome criterion_table() {
  Outcome o;
  int checked = 0;
  for (int N = 1; N <= 8; ++N) {
    for (int m = 0; m <= N; ++m) {
      for (int n = 0; m + n <= N; ++n) {
        const auto gens = bosonic::cone_generators(N, m, n);
        for (int i = 1; i <= N; ++i) {
          ++checked;
          if (bosonic::phi_of(gens[i - 1]) != bosonic::generator_phi_table(N, m, n, i)) {
            o.passed = false;
            o.notes.push_back("N=" + std::to_string(N) + " m=" + std::to_string(m) + " n=" + std::to_string(n) +
                              " i=" + std::to_string(i));
          }
        }
      }
    }
  }
  o.summary = std::to_string(checked) + " generators";
  return o;
}

Outcome criterion_conjecture() {
  SuiteReport report{"conjecture", {}};
  verify::Options opts;
  for (auto [N, k] : {std::pair{3, 1}, {3, 2}, {5, 1}}) report.points.push_back(verify::check_conjecture(N, k, opts));
  Outcome o = from_reports({report});
  for (const auto& p : report.points) {
    if (p.passed) o.notes.push_back(p.label + ": " + p.detail);
  }
  return o;
}

}  // namespace

int main() {
  using verify::Suite;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"fermionic = enumeration = transfer, N=2..6 k=0..3",
       [] { return from_reports({run(Suite::crosscheck, "N=2..6,k=0..3,l=0..k,r=0..k")}); }},
      {"quotient oracle = enumeration, N=2..4 k=0..2",
       [] { return from_reports({run(Suite::crosscheck, "N=2..4,k=0..2,l=0..k,r=0..k", true)}); }},
      {"bosonic sums through maxdeg_q + 2(N+1), N=2..6 k=0..3",
       [] { return from_reports({run(Suite::stp, "N=2..6,k=0..3,l=0..k,r=0..k")}); }},
      {"Andrews-Gordon identity, N={2,4} k=1..3",
       [] { return from_reports({run(Suite::andrews_gordon, "N={2,4},k=1..3")}); }},
      {"recursion in r and reflection symmetry, N=2..6 k=0..3",
       [] {
         return from_reports({run(Suite::recursion, "N=2..6,k=0..3,l=0..k,r=0..k"),
                              run(Suite::symmetry, "N=2..6,k=0..3,l=0..k,r=0..k")});
       }},
      {"vertex recursion, vanishing at r=-1, even/odd agreement, N=2..5 k=1..3",
       [] { return from_reports({run(Suite::lemmas, "N=2..5,k=1..3,l=0..k,r=0..k")}); }},
      {"grouped closed forms, N={2,4,6} k=1..2", [] { return from_reports({run(Suite::grouped, "N={2,4,6},k=1..2")}); }},
      {"cone generator table, N<=8", criterion_table},
      {"singular vertex self-consistency and divisibility, (3,1) (3,2) (5,1)", criterion_conjecture},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.summary = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu: %s (%s, %.2fs)\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first, o.summary.c_str(),
                seconds);
    for (const auto& note : o.notes) std::printf("    %s\n", note.c_str());
    if (!o.passed) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
