#pragma once

#include "gmvf/graph_space.hpp"

#include <compare>
#include <vector>

namespace gmvf {

// Betti pair of the relative homology H_k(cl M, mo M) over GF(2).  On a
// graph only k in {0,1} can be nonzero, and beta0 - beta1 always equals
// chi(cl M) - chi(mo M).
struct ConleyIndex {
  int beta0 = 0;
  int beta1 = 0;
  auto operator<=>(const ConleyIndex&) const = default;
};

// Relative chain complex of (cl M, mo M): degree-1 generators are the
// edges of M, degree-0 generators the vertices of M (mouth vertices are
// quotiented out), and the boundary of an edge is the GF(2) sum of its
// endpoints lying in M.  beta1 is the nullity of the boundary map and
// beta0 its corank.
ConleyIndex conley_index(const GraphSpace& space, const CellSet& m);
ConleyIndex conley_index(const GraphSpace& space, const std::vector<Cell>& m);

} // namespace gmvf
