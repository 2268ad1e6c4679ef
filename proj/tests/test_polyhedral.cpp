#include <doctest.h>

#include "agpoly/polyhedral.hpp"
#include "oracles.hpp"

using namespace agpoly;
using namespace agpoly::polyhedral;

namespace {

std::vector<ExponentVector> vectors(std::initializer_list<std::vector<int>> list) {
  std::vector<ExponentVector> out;
  for (const auto& a : list) out.push_back({a});
  return out;
}

}  // namespace

TEST_CASE("enumerate_basis") {
  CHECK(enumerate_basis({2, 1, 1, 1}) == vectors({{0, 0}, {0, 1}, {1, 0}}));
  CHECK(enumerate_basis({3, 1, 1, 1}) == vectors({{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 0, 1}}));
  CHECK(enumerate_basis({2, 0, 5, 5}) == vectors({{0, 0}}));
}

TEST_CASE("enumerate_basis matches the odometer filter") {
  for (int N = 2; N <= 5; ++N) {
    for (int k = 0; k <= 3; ++k) {
      for (int l = 0; l <= k + 1; ++l) {
        for (int r = 0; r <= k + 1; ++r) {
          std::vector<ExponentVector> expected;
          for (auto& a : oracle::admissible_vectors(N, k, l, r)) expected.push_back({a});
          CHECK(enumerate_basis({N, k, l, r}) == expected);
        }
      }
    }
  }
}

TEST_CASE("hilbert by enumeration and transfer") {
  const LaurentPoly d2{{0, 0, 1}, {1, 1, 1}, {2, 1, 1}};
  const LaurentPoly d3{{0, 0, 1}, {1, 1, 1}, {2, 1, 1}, {3, 1, 1}, {4, 2, 1}};
  const LaurentPoly d2k2{{0, 0, 1}, {1, 1, 1}, {2, 1, 1}, {3, 2, 1}};
  CHECK(hilbert_by_enumeration({2, 1, 1, 1}) == d2);
  CHECK(hilbert_by_enumeration({3, 1, 1, 1}) == d3);
  CHECK(hilbert_by_enumeration({2, 2, 1, 1}) == d2k2);
  CHECK(hilbert_by_transfer({2, 1, 1, 1}) == d2);
  CHECK(hilbert_by_transfer({3, 1, 1, 1}) == d3);
  CHECK(hilbert_by_transfer({2, 2, 1, 1}) == d2k2);
}

TEST_CASE("transfer equals enumeration (property)") {
  for (int N = 2; N <= 6; ++N) {
    for (int k = 0; k <= 3; ++k) {
      for (int l = 0; l <= k; ++l) {
        for (int r = 0; r <= k; ++r) {
          const Params p{N, k, l, r};
          CAPTURE(p.to_string());
          CHECK(hilbert_by_transfer(p) == hilbert_by_enumeration(p));
          CHECK(hilbert_by_transfer(p) == oracle::hilbert(N, k, l, r));
        }
      }
    }
  }
}

TEST_CASE("recursion_rhs") {
  CHECK(recursion_rhs({3, 1, 1, 1}) == LaurentPoly{{0, 0, 1}, {1, 1, 1}, {2, 1, 1}, {3, 1, 1}, {4, 2, 1}});
  CHECK(recursion_rhs({3, 1, 0, 1}) == LaurentPoly{{0, 0, 1}, {2, 1, 1}, {3, 1, 1}});
  CHECK_THROWS_AS(recursion_rhs({4, 0, 0, 0}), UsageError);
  CHECK_THROWS_AS(recursion_rhs({2, 1, 1, 1}), UsageError);
}

TEST_CASE("recursion holds on the grid") {
  for (int N = 3; N <= 6; ++N) {
    for (int k = 1; k <= 3; ++k) {
      for (int l = 0; l <= k; ++l) {
        for (int r = 1; r <= k; ++r) {
          const Params p{N, k, l, r};
          CAPTURE(p.to_string());
          CHECK(recursion_rhs(p) == hilbert_by_transfer(p));
        }
      }
    }
  }
}

TEST_CASE("reflect") {
  CHECK(hilbert_by_enumeration({2, 1, 1, 0}) == LaurentPoly{{0, 0, 1}, {1, 1, 1}});
  CHECK(hilbert_by_enumeration({2, 1, 0, 1}) == LaurentPoly{{0, 0, 1}, {2, 1, 1}});
  CHECK(reflect(LaurentPoly{{0, 0, 1}, {2, 1, 1}}, 2) == LaurentPoly{{0, 0, 1}, {1, 1, 1}});
  CHECK(reflect_check({2, 1, 1, 0}));
  CHECK(reflect_check({3, 1, 1, 0}));
  CHECK(reflect_check({4, 2, 2, 2}));
  for (int N = 2; N <= 6; ++N) {
    for (int k = 0; k <= 3; ++k) {
      for (int l = 0; l <= k; ++l) {
        for (int r = 0; r <= k; ++r) CHECK(reflect_check({N, k, l, r}));
      }
    }
  }
}

TEST_CASE("degree_bounds") {
  CHECK(degree_bounds({2, 1, 1, 1}) == DegreeBounds{2, 1});
  CHECK(degree_bounds({3, 1, 1, 1}) == DegreeBounds{4, 2});
  CHECK(degree_bounds({2, 0, 0, 0}) == DegreeBounds{0, 0});
  for (int N = 2; N <= 5; ++N) {
    for (int k = 0; k <= 3; ++k) {
      for (int l = 0; l <= k; ++l) {
        for (int r = 0; r <= k; ++r) {
          const LaurentPoly d = oracle::hilbert(N, k, l, r);
          CHECK(degree_bounds({N, k, l, r}) == DegreeBounds{*d.max_q(), *d.max_z()});
        }
      }
    }
  }
  CHECK(default_cutoff({2, 1, 1, 1}) == 2 + 6);
  CHECK(default_cutoff({3, 1, 1, -1}) == default_cutoff({3, 1, 1, 0}));
}

TEST_CASE("dropping a zero last coordinate lowers N") {
  for (int N = 3; N <= 6; ++N) {
    for (int k = 0; k <= 3; ++k) {
      for (int l = 0; l <= k; ++l) {
        std::vector<ExponentVector> projected;
        for (auto v : enumerate_basis({N, k, l, 0})) {
          CHECK(v.a.back() == 0);
          v.a.pop_back();
          projected.push_back(v);
        }
        CHECK(projected == enumerate_basis({N - 1, k, l, k}));
        CHECK(hilbert_by_transfer({N, k, l, 0}) == hilbert_by_transfer({N - 1, k, l, k}));
      }
    }
  }
}

TEST_CASE("raising r only adds basis elements") {
  for (int N = 2; N <= 5; ++N) {
    for (int k = 1; k <= 3; ++k) {
      for (int l = 0; l <= k; ++l) {
        for (int r = 1; r <= k; ++r) {
          const LaurentPoly diff = hilbert_by_transfer({N, k, l, r}) - hilbert_by_transfer({N, k, l, r - 1});
          CHECK(diff.all_coefficients_nonnegative());
        }
      }
    }
  }
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(enumerate_basis({1, 1, 1, 1}), UsageError);
  CHECK_THROWS_AS(hilbert_by_transfer({2, -1, 0, 0}), UsageError);
  CHECK_THROWS_AS(hilbert_by_enumeration({2, 1, -1, 0}), UsageError);
}
