#pragma once

// Compact parameter-grid syntax, e.g. "N=2..5,k=0..3,l=0..k,r=0..k".
//
// Each field is VAR=RANGE with VAR in {N, k, l, r}. A RANGE is a single
// bound, an inclusive interval "a..b", or a list "{a,b,c}", optionally
// followed by ":odd" or ":even". A bound is an integer or an earlier
// variable with an optional offset ("k", "k-1"). Missing l and r default
// to "k".

#include <string_view>
#include <vector>

#include "agpoly/params.hpp"

namespace agpoly {

/// All points of the grid in lexicographic (N, k, l, r) order.
std::vector<Params> resolve_grid(std::string_view spec);

}  // namespace agpoly
