#pragma once

#include <stdexcept>
#include <string>

namespace nli {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A length (horizon or subdomain) is not an integer multiple of the mesh size.
class NonCommensurate : public Error {
 public:
  using Error::Error;
};

/// A coordinate lies outside the closure of the global domain.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// Invalid user-supplied parameters (non-positive horizon, empty sweep, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Cholesky pivot was not strictly positive.
class NotPositiveDefinite : public Error {
 public:
  NotPositiveDefinite(std::size_t row, double pivot)
      : Error("matrix is not positive definite: pivot " + std::to_string(pivot) +
              " at row " + std::to_string(row)),
        row_(row),
        pivot_(pivot) {}

  std::size_t row() const noexcept { return row_; }
  double pivot() const noexcept { return pivot_; }

 private:
  std::size_t row_;
  double pivot_;
};

/// The constrained system could not be factored (non-coercive configuration).
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// The interaction ball of a quadrature request leaves the declared domain.
class QuadratureDomainClipped : public Error {
 public:
  using Error::Error;
};

}  // namespace nli
