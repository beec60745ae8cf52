#include "nli/banded_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <utility>

#include "nli/errors.hpp"

namespace nli {

BandedSymmetricMatrix::BandedSymmetricMatrix(std::size_t dim, std::size_t half_bandwidth)
    : dim_(dim), hb_(half_bandwidth), data_(dim * (half_bandwidth + 1), 0.0) {}

double BandedSymmetricMatrix::operator()(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw DimensionMismatch("matrix index out of range");
  if (i < j) std::swap(i, j);
  if (i - j > hb_) return 0.0;
  return data_[index(i, j)];
}

void BandedSymmetricMatrix::add(std::size_t i, std::size_t j, double v) {
  if (i < j) std::swap(i, j);
  if (i >= dim_ || i - j > hb_) throw DimensionMismatch("entry outside the stored band");
  data_[index(i, j)] += v;
}

void BandedSymmetricMatrix::set(std::size_t i, std::size_t j, double v) {
  if (i < j) std::swap(i, j);
  if (i >= dim_ || i - j > hb_) throw DimensionMismatch("entry outside the stored band");
  data_[index(i, j)] = v;
}

std::vector<double> BandedSymmetricMatrix::multiply(std::span<const double> x) const {
  if (x.size() != dim_) throw DimensionMismatch("matrix-vector size mismatch");
  std::vector<double> y(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    const std::size_t jlo = i > hb_ ? i - hb_ : 0;
    const double* row = &data_[i * (hb_ + 1)];
    double acc = row[0] * x[i];
    for (std::size_t j = jlo; j < i; ++j) {
      const double a = row[i - j];
      acc += a * x[j];
      y[j] += a * x[i];
    }
    y[i] += acc;
  }
  return y;
}

double BandedSymmetricMatrix::norm_inf() const {
  std::vector<double> rows(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    const std::size_t jlo = i > hb_ ? i - hb_ : 0;
    for (std::size_t j = jlo; j <= i; ++j) {
      const double a = std::abs(data_[index(i, j)]);
      rows[i] += a;
      if (j != i) rows[j] += a;
    }
  }
  return rows.empty() ? 0.0 : *std::max_element(rows.begin(), rows.end());
}

double BandedSymmetricMatrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

void BandedSymmetricMatrix::write_coordinate(std::ostream& os) const {
  char buf[64];
  for (std::size_t i = 0; i < dim_; ++i) {
    const std::size_t jlo = i > hb_ ? i - hb_ : 0;
    for (std::size_t j = jlo; j <= i; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", data_[index(i, j)]);
      os << i << ' ' << j << ' ' << buf << '\n';
    }
  }
}

}  // namespace nli
