#include "nli/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nli/errors.hpp"

namespace nli {

namespace {

constexpr double kCommensurateTol = 1e-9;

std::size_t checked_ratio(double length, double h, const char* what) {
  const double ratio = length / h;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > kCommensurateTol * std::max(1.0, ratio)) {
    std::ostringstream os;
    os.precision(17);
    os << what << " = " << length << " is not a positive integer multiple of h = " << h
       << " (ratio " << ratio << ")";
    throw NonCommensurate(os.str());
  }
  return static_cast<std::size_t>(rounded);
}

}  // namespace

const char* to_string(Region r) {
  switch (r) {
    case Region::Gamma1: return "Gamma1";
    case Region::Omega1: return "Omega1";
    case Region::Omega2: return "Omega2";
    case Region::Gamma2: return "Gamma2";
  }
  return "?";
}

Interval Interval::intersect(const Interval& other) const {
  return {std::max(lo, other.lo), std::min(hi, other.hi)};
}

void DomainLayout::validate() const {
  if (!(a < x_gamma && x_gamma < b)) {
    throw InvalidArgument("domain layout requires a < x_gamma < b");
  }
  if (!(delta1 > 0.0) || !(delta2 > 0.0)) {
    throw InvalidArgument("horizons must be strictly positive");
  }
  if (!std::isfinite(lower()) || !std::isfinite(upper())) {
    throw InvalidArgument("domain layout is not finite");
  }
}

Region DomainLayout::classify(double x, Side interface_side) const {
  if (!(x >= lower() && x <= upper())) {
    std::ostringstream os;
    os.precision(17);
    os << "x = " << x << " outside [" << lower() << ", " << upper() << "]";
    throw OutOfDomain(os.str());
  }
  if (x <= a) return Region::Gamma1;
  if (x >= b) return Region::Gamma2;
  if (x < x_gamma) return Region::Omega1;
  if (x > x_gamma) return Region::Omega2;
  return interface_side == Side::Left ? Region::Omega1 : Region::Omega2;
}

RegionSet interaction_regions(const DomainLayout& layout) {
  const Interval omega1{layout.a, layout.x_gamma};
  const Interval omega2{layout.x_gamma, layout.b};
  const double xg = layout.x_gamma;
  const double dmax = std::max(layout.delta1, layout.delta2);

  RegionSet r;
  r.gamma12 = Interval{xg, xg + layout.delta1}.intersect(omega2);
  r.gamma21 = Interval{xg - layout.delta2, xg}.intersect(omega1);
  r.under_gamma12 = Interval{xg, xg + layout.delta2}.intersect(omega2);
  r.under_gamma21 = Interval{xg - layout.delta1, xg}.intersect(omega1);
  r.gamma_star = Interval{xg - dmax, xg + dmax}.intersect(Interval{layout.a, layout.b});
  return r;
}

Mesh1D::Mesh1D(const DomainLayout& layout, double h) : layout_(layout), h_(h) {
  layout_.validate();
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw InvalidArgument("mesh size must be positive");
  }
  struct Segment {
    double lo, hi;
    std::size_t n;
    Region region;
  };
  const Segment segments[4] = {
      {layout.lower(), layout.a, checked_ratio(layout.delta1, h, "delta1"), Region::Gamma1},
      {layout.a, layout.x_gamma, checked_ratio(layout.x_gamma - layout.a, h, "x_gamma - a"),
       Region::Omega1},
      {layout.x_gamma, layout.b, checked_ratio(layout.b - layout.x_gamma, h, "b - x_gamma"),
       Region::Omega2},
      {layout.b, layout.upper(), checked_ratio(layout.delta2, h, "delta2"), Region::Gamma2},
  };

  // Nodes are generated per segment from exact anchors so that every region
  // boundary is reproduced bit-for-bit.
  nodes_.push_back(segments[0].lo);
  for (std::size_t s = 0; s < 4; ++s) {
    const auto& seg = segments[s];
    for (std::size_t k = 1; k <= seg.n; ++k) {
      nodes_.push_back(k == seg.n ? seg.hi
                                  : seg.lo + (seg.hi - seg.lo) * static_cast<double>(k) /
                                                 static_cast<double>(seg.n));
    }
    counts_[s] = seg.n;
    if (s == 1) interface_node_ = nodes_.size() - 1;
  }

  auto dof_of_node = [this](std::size_t node, Side from) {
    if (node < interface_node_) return node;
    if (node > interface_node_) return node + 1;
    return from == Side::Left ? interface_node_ : interface_node_ + 1;
  };

  const std::size_t ne = nodes_.size() - 1;
  elements_.reserve(ne);
  std::size_t seg = 0, in_seg = 0;
  for (std::size_t e = 0; e < ne; ++e) {
    while (in_seg == segments[seg].n) {
      ++seg;
      in_seg = 0;
    }
    const Region region = segments[seg].region;
    const Side side = side_of(region);
    elements_.push_back(Element{dof_of_node(e, side), dof_of_node(e + 1, side), nodes_[e],
                                nodes_[e + 1], region});
    ++in_seg;
  }

  dof_coords_.reserve(nodes_.size() + 1);
  dof_sides_.reserve(nodes_.size() + 1);
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    const Side s = nodes_[n] <= layout.x_gamma ? Side::Left : Side::Right;
    dof_coords_.push_back(nodes_[n]);
    dof_sides_.push_back(s);
    if (n == interface_node_) {
      dof_coords_.push_back(nodes_[n]);
      dof_sides_.push_back(Side::Right);
    }
  }
}

std::size_t Mesh1D::locate(double x) const {
  const double t = std::floor((x - nodes_.front()) / h_);
  std::size_t e = t <= 0.0 ? 0 : static_cast<std::size_t>(t);
  e = std::min(e, elements_.size() - 1);
  // Guard against rounding in the division.
  while (e > 0 && x < elements_[e].x0) --e;
  while (e + 1 < elements_.size() && x >= elements_[e].x1) ++e;
  return e;
}

std::size_t Mesh1D::elements_in(Region r) const {
  return counts_[static_cast<std::size_t>(r)];
}

Mesh1D build_mesh(const DomainLayout& layout, double h) { return Mesh1D(layout, h); }

double evaluate_on_element(const Element& e, std::span<const double> coeffs, double x) {
  const double t = (x - e.x0) / (e.x1 - e.x0);
  return (1.0 - t) * coeffs[e.left_dof] + t * coeffs[e.right_dof];
}

}  // namespace nli
