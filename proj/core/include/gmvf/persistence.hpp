#pragma once

#include "gmvf/conley.hpp"
#include "gmvf/morse.hpp"
#include "gmvf/multivector.hpp"
#include "gmvf/relation_matrix.hpp"

#include <vector>

namespace gmvf {

// One evaluation of the pipeline: multivector field, M-graph and Morse
// decomposition at a fixed threshold.  Regular regimes are evaluated at a
// critical value c (actives = {W > c}); the final regime sits below the
// minimum critical value, where every relation is active.
struct FiltrationRegime {
  double lambda = 0.0;
  bool all_active = false;
  MultivectorField mvf;
  MGraph mgraph;
  MorseDecomposition morse;
};

struct FiltrationScan {
  GraphSpace space;
  std::vector<double> criticals; // ascending
  std::vector<FiltrationRegime> regimes; // descending lambda
};

// Builds one regime per critical value, in descending order, plus the
// all-active regime evaluated at (min critical - delta) with delta half
// the minimal gap between critical values (1 when only one value exists).
// Regime constructions are independent; threads > 1 runs them in parallel
// with output identical to the sequential run.
FiltrationScan scan_filtration(const GraphSpace& space, const RelationMatrix& w,
                               int threads = 1);

struct PersistencePoint {
  double birth = 0.0;
  double death = 0.0;
  bool essential = false;
  Cell representative = Cell::vertex(0); // canonical block id at birth
  ConleyIndex index_at_birth;
};

struct PersistenceDiagram {
  std::vector<double> criticals;
  std::vector<PersistencePoint> points; // canonical order
};

// Tracks Morse sets from fine to coarse regimes.  Every coarse Morse set
// collects the fine Morse sets whose cells it contains; a single
// predecessor continues the track, two or more are a merge event in which
// the eldest track survives (ties broken by larger cell count, then by
// smaller canonical representative of the fine set).  Dying tracks record
// the parameter of the last regime in which they were still separate, so
// all coordinates lie in the critical-value set.  Tracks alive after the
// all-active regime are essential with death = min critical value.
PersistenceDiagram morse_persistence(const FiltrationScan& scan);
PersistenceDiagram morse_persistence(const GraphSpace& space,
                                     const RelationMatrix& w, int threads = 1);

struct EnrichedPoint {
  double birth = 0.0;
  double death = 0.0;
  int k = 0;
  int betti = 0;
  bool essential = false;
};

// (birth, death, k, beta_k) tuples for k in {0,1}, taking beta_k from the
// index at birth and omitting zero entries.
std::vector<EnrichedPoint> enriched_diagram(const PersistenceDiagram& d);

} // namespace gmvf
