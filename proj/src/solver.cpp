#include "nli/solver.hpp"

#include <algorithm>
#include <cmath>

#include "nli/errors.hpp"

namespace nli {

BandedCholeskyFactor BandedCholeskyFactor::factor(const BandedSymmetricMatrix& a) {
  const std::size_t n = a.dim();
  const std::size_t hb = a.half_bandwidth();
  const std::size_t stride = hb + 1;
  BandedSymmetricMatrix l = a;
  double* d = l.band().data();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t klo = i > hb ? i - hb : 0;
    double* row_i = d + i * stride;  // row_i[i - k] == L(i, k)
    for (std::size_t j = klo; j <= i; ++j) {
      const double* row_j = d + j * stride;
      double s = row_i[i - j];
      for (std::size_t k = klo; k < j; ++k) s -= row_i[i - k] * row_j[j - k];
      if (j == i) {
        if (!(s > 0.0)) throw NotPositiveDefinite(i, s);
        row_i[0] = std::sqrt(s);
      } else {
        row_i[i - j] = s / row_j[0];
      }
    }
  }
  return BandedCholeskyFactor(std::move(l));
}

std::vector<double> BandedCholeskyFactor::solve(std::span<const double> rhs) const {
  const std::size_t n = dim();
  if (rhs.size() != n) throw DimensionMismatch("right-hand side length does not match factor");
  const std::size_t hb = half_bandwidth();
  const std::size_t stride = hb + 1;
  const double* d = lower_.band().data();

  std::vector<double> u(rhs.begin(), rhs.end());
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = d + i * stride;
    const std::size_t klo = i > hb ? i - hb : 0;
    double s = u[i];
    for (std::size_t k = klo; k < i; ++k) s -= row[i - k] * u[k];
    u[i] = s / row[0];
  }
  for (std::size_t ii = n; ii-- > 0;) {
    u[ii] /= d[ii * stride];
    const double ui = u[ii];
    const double* row = d + ii * stride;
    const std::size_t klo = ii > hb ? ii - hb : 0;
    for (std::size_t k = klo; k < ii; ++k) u[k] -= row[ii - k] * ui;
  }
  return u;
}

}  // namespace nli
