#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gmvf {

// Dense n x n matrix of real-valued relation weights W(i,j).  Entries are
// unitless and not required to lie in [0,1]; no symmetry is assumed and no
// normalization is performed.  Diagonal entries are stored as parsed but
// ignored by every operation.
class RelationMatrix {
public:
  explicit RelationMatrix(int n);
  RelationMatrix(int n, std::vector<double> row_major);

  int n() const { return n_; }
  double at(int i, int j) const { return entries_[idx(i, j)]; }
  void set(int i, int j, double v);

  const std::vector<double>& entries() const { return entries_; }

  bool operator==(const RelationMatrix&) const = default;

private:
  int idx(int i, int j) const;
  int n_;
  std::vector<double> entries_;
};

// Thresholded relation w_lambda: the set of ordered pairs (i,j), i != j,
// whose weight strictly exceeds lambda.
class BooleanRelation {
public:
  explicit BooleanRelation(int n);

  int n() const { return n_; }
  bool active(int i, int j) const { return active_[i * n_ + j] != 0; }
  void set_active(int i, int j, bool v);

  std::vector<std::pair<int, int>> active_pairs() const;

  bool operator==(const BooleanRelation&) const = default;

private:
  int n_;
  std::vector<char> active_;
};

// w_lambda(i,j) = 1 iff W(i,j) > lambda (strict; entries equal to lambda
// are inactive).
BooleanRelation threshold(const RelationMatrix& w, double lambda);

// Ascending, deduplicated list of the off-diagonal entries.  The
// thresholded relation is constant for lambda ranging over any interval
// containing none of these values.
std::vector<double> critical_values(const RelationMatrix& w);

// max over i != j of |W(i,j) - W'(i,j)|.  Throws std::invalid_argument on
// dimension mismatch.
double sup_distance(const RelationMatrix& a, const RelationMatrix& b);

// Each off-diagonal entry shifted by an independent uniform draw from
// [-eps, eps]; deterministic for a fixed seed.  sup_distance(W, result)
// <= eps by construction.
RelationMatrix perturb(const RelationMatrix& w, double eps, std::uint64_t seed);

} // namespace gmvf
