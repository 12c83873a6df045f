#pragma once

#include <array>

#include "pisot/geometry.hpp"
#include "pisot/pisot_data.hpp"

namespace pisot {

/// Cut-and-project scheme of a Pisot matrix: the lattice Z^3 with the
/// expanding line V (coordinate pi1) and the contracting plane W (pi2).
class Cps {
 public:
  explicit Cps(PisotData pd);

  const PisotData& pisot() const { return pisot_; }
  double lambda() const { return pisot_.lambda; }
  const std::array<double, 3>& pi1() const { return pi1_; }
  const std::array<std::array<double, 3>, 2>& pi2() const { return pi2_; }
  /// Action of M on internal coordinates: pi2 M = a_w pi2.
  const Mat2& a_w() const { return a_w_; }
  /// Whether W is spanned by (Re, Im) of one complex embedding.
  bool complex_internal() const { return complex_internal_; }

  Point2 star(const IntVector3& v) const;
  /// Image of the basis vector of letter g.
  Point2 star_letter(int g) const { return star_basis_[static_cast<std::size_t>(g)]; }
  double project_phys(const IntVector3& v) const;

  /// Largest |eigenvalue| of a_w estimated by power iteration.
  double spectral_radius_estimate(int iterations = 40) const;

 private:
  PisotData pisot_;
  std::array<double, 3> pi1_{};
  std::array<std::array<double, 3>, 2> pi2_{};
  std::array<Point2, 3> star_basis_{};
  Mat2 a_w_;
  bool complex_internal_ = true;
};

Cps build_cps(const PisotData& pd);

}  // namespace pisot
