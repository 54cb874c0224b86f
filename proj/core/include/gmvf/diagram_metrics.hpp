#pragma once

#include "gmvf/persistence.hpp"
#include "gmvf/relation_matrix.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace gmvf {

// Minimal point view used by the bottleneck computation; the diagram
// convention is descending (birth >= death), so the diagonal cost of a
// point is (birth - death) / 2 in the sup norm.
struct DiagramPoint {
  double birth = 0.0;
  double death = 0.0;
  bool essential = false;
};

// One optimal assignment: off-diagonal points of either diagram appear in
// exactly one pair; -1 stands for the diagonal.
struct Matching {
  struct Pair {
    int left = -1;
    int right = -1;
  };
  std::vector<Pair> pairs;
  double cost = 0.0;
};

// Exact bottleneck distance.  Essential points match only essential
// points; when the essential counts differ the distance is +infinity.
// The infimum is attained on the finite candidate set of pairwise costs,
// located by binary search with a maximum-bipartite-matching feasibility
// check.
double bottleneck(const std::vector<DiagramPoint>& d1,
                  const std::vector<DiagramPoint>& d2);
double bottleneck(const PersistenceDiagram& d1, const PersistenceDiagram& d2);
Matching bottleneck_matching(const std::vector<DiagramPoint>& d1,
                             const std::vector<DiagramPoint>& d2);

std::vector<DiagramPoint> diagram_points(const PersistenceDiagram& d);

// Points of the Conley-enriched k-slice (beta_k > 0 at birth).
std::vector<DiagramPoint> k_slice(const PersistenceDiagram& d, int k);

struct StabilityOptions {
  double epsilon = 0.0;
  int trials = 1;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  int slice = -1; // -1 = full diagram, 0/1 = enriched k-slice
  int threads = 1;
};

struct StabilityReport {
  double epsilon = 0.0;
  int trials = 0;
  int slice = -1;
  double max_distance = 0.0;
  double max_ratio = 0.0;
  bool pass = false;
  bool labels_agree = true; // slice mode only: multiset equality of labels
  std::vector<std::uint64_t> failures; // offending trial seeds
  std::vector<double> distances;
};

// Draws W' = perturb(W, eps, seed + t) per trial and checks
// bottleneck(D_W, D_W') <= eps + tolerance.  Trials are independent and
// may run in parallel.
StabilityReport check_stability(const RelationMatrix& w,
                                const StabilityOptions& opts);

// Polynomial feature vector adapted to the descending convention: with
// lifetimes l_i = b_i - d_i and d_max the largest death coordinate,
//   f1 = sum d_i l_i          f2 = sum (d_max - d_i) l_i
//   f3 = sum d_i^2 l_i^4      f4 = sum (d_max - d_i)^2 l_i^4
// Essential points are excluded from the sums.
std::array<double, 4> acc_features(const PersistenceDiagram& d);

} // namespace gmvf
