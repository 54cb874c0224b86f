#pragma once

#include "gmvf/multivector.hpp"

#include <utility>
#include <vector>

namespace gmvf {

// Directed graph on the blocks of a multivector field: an arc B -> C is
// present for distinct blocks whenever C meets mo(B).  Self-loops are
// never stored; every node trivially reaches itself.
struct MGraph {
  int node_count = 0;
  std::vector<std::vector<int>> out; // sorted, unique, no self-loops

  std::vector<std::pair<int, int>> arcs() const;
};

MGraph build_mgraph(const GraphSpace& space, const MultivectorField& mvf);

// A maximal strongly connected component of the M-graph, together with the
// union of its blocks' cells (empty when the decomposition was computed
// from a bare graph).
struct MorseSet {
  std::vector<int> blocks; // M-graph node ids, sorted
  std::vector<Cell> cells; // sorted union of block cells
};

struct MorseDecomposition {
  std::vector<MorseSet> sets;  // sorted by minimal member node
  std::vector<int> set_of_node; // node id -> index into sets
  std::vector<std::vector<char>> reach; // strict reachability on sets

  // q > p in the reachability order iff some arc path leads from a block
  // of q's component to a block of p's.
  bool reaches(int above, int below) const {
    return reach[above][below] != 0;
  }
};

// Strongly connected components with the reachability order on the
// condensation.  Because block ids are canonical, sorting components by
// minimal node sorts them by the minimal cell of their minimal block.
MorseDecomposition morse_decomposition(const MGraph& g);
MorseDecomposition morse_decomposition(const MultivectorField& mvf,
                                       const MGraph& g);
MorseDecomposition morse_decomposition(const MultivectorField& mvf);

} // namespace gmvf
