#pragma once

#include "gmvf/relation_matrix.hpp"

#include <cstdint>

namespace gmvf {

// Uniform [0,1) off-diagonal weights, zero diagonal; deterministic per seed.
RelationMatrix gen_random_relation(int n, std::uint64_t seed);

// Random row-stochastic matrix (rows sum to 1, including the diagonal).
RelationMatrix gen_random_stochastic(int n, std::uint64_t seed);

// Relation matrix of a Markov chain: validates that every row of p sums to
// 1 within 1e-9 (throws std::invalid_argument otherwise) and passes the
// off-diagonal transition probabilities through, zeroing the diagonal.
RelationMatrix markov_to_relation(const RelationMatrix& p);

} // namespace gmvf
