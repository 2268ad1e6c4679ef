#include "agpoly/params.hpp"

#include "agpoly/laurent_poly.hpp"

namespace agpoly {

std::string Params::to_string() const {
  return "N=" + std::to_string(N) + " k=" + std::to_string(k) + " l=" + std::to_string(l) +
         " r=" + std::to_string(r);
}

void require_basis_params(const Params& p) {
  if (p.N < 2) throw UsageError("N >= 2 required (" + p.to_string() + ")");
  if (p.k < 0) throw UsageError("k >= 0 required (" + p.to_string() + ")");
  if (p.l < 0) throw UsageError("l >= 0 required (" + p.to_string() + ")");
  if (p.r < 0) throw UsageError("r >= 0 required (" + p.to_string() + ")");
}

void require_vertex_params(const Params& p) {
  if (p.N < 1) throw UsageError("N >= 1 required (" + p.to_string() + ")");
  if (p.k < 0) throw UsageError("k >= 0 required (" + p.to_string() + ")");
}

}  // namespace agpoly
