#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace nli {

/// Symmetric matrix stored as its lower band: entry (i, j) with
/// 0 <= i - j <= half_bandwidth lives at data[i * (half_bandwidth + 1) + (i - j)].
/// Reads of (i, j) with i < j are mirrored; anything outside the band is zero.
class BandedSymmetricMatrix {
 public:
  BandedSymmetricMatrix() = default;
  BandedSymmetricMatrix(std::size_t dim, std::size_t half_bandwidth);

  std::size_t dim() const { return dim_; }
  std::size_t half_bandwidth() const { return hb_; }

  bool in_band(std::size_t i, std::size_t j) const {
    return (i >= j ? i - j : j - i) <= hb_;
  }

  double operator()(std::size_t i, std::size_t j) const;

  /// Adds v to (i, j) and therefore also to (j, i). Throws if outside the band.
  void add(std::size_t i, std::size_t j, double v);
  void set(std::size_t i, std::size_t j, double v);

  /// y = A x
  std::vector<double> multiply(std::span<const double> x) const;

  /// Max absolute row sum.
  double norm_inf() const;
  double max_abs() const;

  /// Raw band storage (row-major, lower band).
  std::span<const double> band() const { return data_; }
  std::span<double> band() { return data_; }

  /// Coordinate dump: "i j value" per stored lower-triangle entry, 0-based,
  /// 17 significant digits.
  void write_coordinate(std::ostream& os) const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const { return i * (hb_ + 1) + (i - j); }

  std::size_t dim_ = 0;
  std::size_t hb_ = 0;
  std::vector<double> data_;
};

}  // namespace nli
