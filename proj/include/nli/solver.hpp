#pragma once

#include <span>
#include <utility>
#include <vector>

#include "nli/banded_matrix.hpp"

namespace nli {

/// Banded Cholesky factor A = L L^T. L keeps the half bandwidth of A and is
/// immutable once built, so one factor can serve concurrent solves.
class BandedCholeskyFactor {
 public:
  /// Throws NotPositiveDefinite on a non-positive pivot.
  static BandedCholeskyFactor factor(const BandedSymmetricMatrix& a);

  std::size_t dim() const { return lower_.dim(); }
  std::size_t half_bandwidth() const { return lower_.half_bandwidth(); }

  /// L(i, j) for j <= i; zero above the diagonal.
  double lower(std::size_t i, std::size_t j) const { return j > i ? 0.0 : lower_(i, j); }

  /// Solves A u = rhs. Throws DimensionMismatch if sizes differ.
  std::vector<double> solve(std::span<const double> rhs) const;

 private:
  explicit BandedCholeskyFactor(BandedSymmetricMatrix l) : lower_(std::move(l)) {}

  // Same band layout as BandedSymmetricMatrix; only the lower triangle is meaningful.
  BandedSymmetricMatrix lower_;
};

}  // namespace nli
