#pragma once

#include <compare>
#include <string>

namespace agpoly {

/// Chain length N, level k and the boundary bounds l (at e_1) and r (at e_N).
struct Params {
  int N = 2;
  int k = 0;
  int l = 0;
  int r = 0;

  friend auto operator<=>(const Params&, const Params&) = default;
  friend bool operator==(const Params&, const Params&) = default;

  std::string to_string() const;
};

/// N >= 2 and k, l, r >= 0; required by the quotient, enumeration and
/// fermionic methods. Throws UsageError naming the violated condition.
void require_basis_params(const Params& p);

/// N >= 1 and k >= 0; the vertex formulas accept any integers l and r.
void require_vertex_params(const Params& p);

}  // namespace agpoly
