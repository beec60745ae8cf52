#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace nli {

/// Which material a point or element belongs to. Side 1 is Omega_1 plus its
/// constraint layer Gamma_1, side 2 is Omega_2 plus Gamma_2.
enum class Side { Left = 1, Right = 2 };

enum class Region { Gamma1, Omega1, Omega2, Gamma2 };

constexpr Side side_of(Region r) {
  return (r == Region::Gamma1 || r == Region::Omega1) ? Side::Left : Side::Right;
}

constexpr bool is_constraint_region(Region r) {
  return r == Region::Gamma1 || r == Region::Gamma2;
}

const char* to_string(Region r);

/// Open interval (lo, hi). Empty when hi <= lo.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool empty() const { return !(hi > lo); }
  double length() const { return empty() ? 0.0 : hi - lo; }
  bool contains(double x) const { return x > lo && x < hi; }
  /// True when `other` is empty or lies inside the closure of this interval.
  bool includes(const Interval& other) const {
    return other.empty() || (other.lo >= lo && other.hi <= hi);
  }
  Interval intersect(const Interval& other) const;
};

/// Layout of the one-dimensional interface problem:
///
///   Gamma_1 = [a - delta1, a], Omega_1 = (a, x_gamma), Omega_2 = (x_gamma, b),
///   Gamma_2 = [b, b + delta2].
struct DomainLayout {
  double a = -0.5;
  double x_gamma = 0.0;
  double b = 0.5;
  double delta1 = 0.03125;
  double delta2 = 0.0625;

  /// Throws InvalidArgument unless a < x_gamma < b and both horizons are positive.
  void validate() const;

  double lower() const { return a - delta1; }
  double upper() const { return b + delta2; }
  double horizon(Side s) const { return s == Side::Left ? delta1 : delta2; }

  /// Region containing x. Closed constraint layers, open subdomains. The
  /// interface point itself is assigned to `interface_side`.
  Region classify(double x, Side interface_side = Side::Left) const;
};

/// Interaction regions around the interface, each clipped to its host subdomain.
struct RegionSet {
  Interval gamma12;        // part of Omega_2 seen from Omega_1 through B_1
  Interval gamma21;        // part of Omega_1 seen from Omega_2 through B_2
  Interval under_gamma12;  // part of Omega_2 within delta2 of Omega_1
  Interval under_gamma21;  // part of Omega_1 within delta1 of Omega_2
  Interval gamma_star;     // union using the larger horizon on each side
};

RegionSet interaction_regions(const DomainLayout& layout);

struct Element {
  std::size_t left_dof;
  std::size_t right_dof;
  double x0;
  double x1;
  Region region;

  Side side() const { return side_of(region); }
  double midpoint() const { return 0.5 * (x0 + x1); }
};

/// Uniform interface-fitted mesh of [a - delta1, b + delta2] carrying a double
/// node at x_gamma. DOFs are numbered left to right; the interface contributes
/// two consecutive DOFs, the first belonging to the element left of x_gamma.
class Mesh1D {
 public:
  Mesh1D(const DomainLayout& layout, double h);

  const DomainLayout& layout() const { return layout_; }
  double h() const { return h_; }

  std::span<const double> nodes() const { return nodes_; }
  std::span<const Element> elements() const { return elements_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t element_count() const { return elements_.size(); }
  std::size_t dof_count() const { return dof_coords_.size(); }

  /// Coordinate of every DOF; the interface coordinate appears twice.
  std::span<const double> dof_coordinates() const { return dof_coords_; }
  Side dof_side(std::size_t dof) const { return dof_sides_[dof]; }

  std::size_t interface_node() const { return interface_node_; }
  std::size_t interface_dof_left() const { return interface_node_; }
  std::size_t interface_dof_right() const { return interface_node_ + 1; }

  /// Index of the element containing x (x strictly interior or on an element
  /// boundary; boundaries map to the element on their right except at the upper end).
  std::size_t locate(double x) const;

  /// Number of elements in Gamma_1, Omega_1, Omega_2, Gamma_2.
  std::size_t elements_in(Region r) const;

 private:
  DomainLayout layout_;
  double h_;
  std::vector<double> nodes_;
  std::vector<Element> elements_;
  std::vector<double> dof_coords_;
  std::vector<Side> dof_sides_;
  std::size_t interface_node_ = 0;
  std::size_t counts_[4] = {0, 0, 0, 0};
};

/// Builds the mesh; throws NonCommensurate if a horizon or subdomain length is
/// not an integer multiple of h.
Mesh1D build_mesh(const DomainLayout& layout, double h);

/// Evaluates the piecewise-linear function with nodal `coeffs` at x inside
/// element `e`.
double evaluate_on_element(const Element& e, std::span<const double> coeffs, double x);

}  // namespace nli
