#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "hyperlattice/matrix.hpp"
#include "hyperlattice/reduce.hpp"
#include "hyperlattice/ribbon.hpp"

namespace hyperlattice {

struct EnumerationOptions {
  std::uint64_t node_budget = 5'000'000'000ULL;
  int threads = 1;
  // Basis reduction before enumerating: 0 none, 1 LLL, >= 2 BKZ block size.
  int reduction = 20;
};

// Counts indexed by the norm x.A.x.
struct ThetaSeries {
  int max_norm = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t nodes = 0;

  std::uint64_t at(int norm) const { return norm >= 0 && norm < int(counts.size()) ? counts[norm] : 0; }
  std::vector<std::pair<int, std::uint64_t>> nonzero() const;
  friend bool operator==(const ThetaSeries& a, const ThetaSeries& b) {
    return a.max_norm == b.max_norm && a.counts == b.counts;
  }
};

// Vectors of one norm, one per +- pair, first nonzero coordinate positive,
// sorted lexicographically.
struct Shell {
  int norm = 0;
  std::vector<std::vector<std::int64_t>> vectors;
};

ThetaSeries theta_series(const IntMatrix& gram, int max_norm, const EnumerationOptions& opts = {});

// Calls visit(x, norm) for every nonzero x with x.A.x <= max_norm, one per
// +- pair (canonical sign), in unspecified order. Single-threaded.
std::uint64_t visit_short_vectors(const IntMatrix& gram, int max_norm,
                                  const std::function<void(const std::vector<std::int64_t>&, std::int64_t)>& visit,
                                  const EnumerationOptions& opts = {});

// Naive count over the box |x_i| <= sqrt(max_norm * (A^-1)_ii), exact
// integer norms throughout. Only practical for small rank.
ThetaSeries box_theta_series(const IntMatrix& gram, int max_norm);

Shell shell(const IntMatrix& gram, int norm, const EnumerationOptions& opts = {});
std::vector<Shell> shells(const IntMatrix& gram, int max_norm, const EnumerationOptions& opts = {});

struct KissingData {
  int min_norm = 0;
  std::uint64_t kissing_number = 0;
  bool min_vectors_are_hyperroots = false;
  int span_dim_of_min_shell = 0;
};

struct ShellDecomposition {
  int norm = 0;
  std::uint64_t total = 0;
  std::uint64_t hyperroot_count = 0;
  std::uint64_t other_count = 0;
};

// The Gram matrix must be the one of coords' basis.
KissingData kissing_data(const HyperRootCoordinates& coords, const EnumerationOptions& opts = {});
ShellDecomposition shell_decomposition(const HyperRootCoordinates& coords, int norm,
                                       const EnumerationOptions& opts = {});

}  // namespace hyperlattice
