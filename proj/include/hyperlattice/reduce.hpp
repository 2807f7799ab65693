#pragma once

#include "hyperlattice/matrix.hpp"

namespace hyperlattice {

// A basis change: gram = transform^T * original * transform with a
// unimodular integer transform (columns are the new basis vectors).
struct ReducedGram {
  IntMatrix gram;
  IntMatrix transform;
};

ReducedGram lll_reduce(const IntMatrix& gram, double delta = 0.99);

// BKZ with the given block size; block_size < 2 means LLL only.
ReducedGram bkz_reduce(const IntMatrix& gram, int block_size, int max_tours = 16);

}  // namespace hyperlattice
