#pragma once

#include "gmvf/graph_space.hpp"
#include "gmvf/relation_matrix.hpp"

#include <vector>

namespace gmvf {

// A partition of X into nonempty, connected (hence locally closed) blocks.
// Blocks are kept in canonical order: each block is identified by its
// minimal cell, cells within a block are sorted, and blocks are sorted by
// their identifiers.
class MultivectorField {
public:
  MultivectorField(GraphSpace space, std::vector<std::vector<Cell>> blocks);

  const GraphSpace& space() const { return space_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Cell>& block(int b) const { return blocks_[b]; }
  const std::vector<std::vector<Cell>>& blocks() const { return blocks_; }

  int block_of(const Cell& c) const { return block_of_id_[space_.id_of(c)]; }
  int block_of_id(int cell_id) const { return block_of_id_[cell_id]; }

  // Canonical block identifier: the minimal cell.
  Cell representative(int b) const { return blocks_[b].front(); }

  bool operator==(const MultivectorField& other) const {
    return space_ == other.space_ && blocks_ == other.blocks_;
  }

private:
  GraphSpace space_;
  std::vector<std::vector<Cell>> blocks_;
  std::vector<int> block_of_id_;
};

// Merging construction of the multivector field at threshold lambda:
// starting from singletons, vertex v_i is merged into the block of edge
// (v_i,v_j) when W(i,j) > lambda, v_j when W(j,i) > lambda, with
// transitive merging subsumed by a disjoint-set forest over X.  The result
// is independent of merge processing order.
MultivectorField build_mvf(const GraphSpace& space, const RelationMatrix& w,
                           double lambda);
MultivectorField build_mvf(const GraphSpace& space, const BooleanRelation& rel);

// True iff every block of a is contained in some block of b.  Throws
// std::invalid_argument when the fields live on different spaces.
bool refines(const MultivectorField& a, const MultivectorField& b);

} // namespace gmvf
