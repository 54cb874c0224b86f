#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gmvf {

// An element of the combinatorial space X = V u E: either a vertex or an
// unordered edge between two distinct vertices.  Indices are 0-based
// internally; name() prints them 1-based ("v1", "e1_2").
//
// The default comparison is the canonical total order used everywhere for
// block identifiers: vertices before edges, then index order.
class Cell {
public:
  static Cell vertex(int v);
  static Cell edge(int a, int b); // endpoints reordered so a < b

  bool is_vertex() const { return kind_ == 0; }
  bool is_edge() const { return kind_ == 1; }
  int vertex_index() const { return a_; }
  std::pair<int, int> endpoints() const { return {a_, b_}; }

  std::string name() const;
  static Cell from_name(const std::string& name);

  auto operator<=>(const Cell&) const = default;

private:
  Cell(int kind, int a, int b) : kind_(kind), a_(a), b_(b) {}
  int kind_; // 0 = vertex, 1 = edge
  int a_;    // vertex index, or smaller edge endpoint
  int b_;    // -1 for vertices, larger edge endpoint otherwise
};

using CellSet = std::set<Cell>;

// Face order of the graph poset: x <= y iff x == y, or x is a vertex
// endpoint of the edge y.
bool face_leq(const Cell& x, const Cell& y);

// The space X = V u E over n vertices.  By default every edge of the
// complete graph is present; a subset of edges may be supplied instead
// (used by the --drop-zero-edges ingestion flag).
class GraphSpace {
public:
  explicit GraphSpace(int n);
  GraphSpace(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int cell_count() const { return n_ + edge_count(); }

  // Cell ids enumerate X in the canonical order: vertices 0..n-1, then
  // edges in lexicographic endpoint order.
  int id_of(const Cell& c) const; // throws std::out_of_range if not in X
  Cell cell_at(int id) const;
  bool contains(const Cell& c) const;

  std::vector<Cell> cells() const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool operator==(const GraphSpace& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

private:
  int n_;
  std::vector<std::pair<int, int>> edges_; // sorted, i < j
  std::vector<int> edge_ordinal_;          // n*n lookup, -1 if absent
};

// cl(A): A together with the endpoints of every edge in A.  Extensive,
// monotone, idempotent.
CellSet closure(const GraphSpace& space, const CellSet& a);

// mo(A) = cl(A) \ A; always a set of vertex cells.
CellSet mouth(const GraphSpace& space, const CellSet& a);

// Connectivity in the incidence graph on X (vertex adjacent to each edge
// it bounds).  The empty set and singletons count as connected.
bool is_connected(const GraphSpace& space, const CellSet& a);

// Order-convexity: no x <= y <= z chain with x,z in A and y outside.
// Checked generically even though on a height-2 graph poset every subset
// passes.
bool is_locally_closed(const GraphSpace& space, const CellSet& a);

} // namespace gmvf
