#include "pisot/cps.hpp"

#include <cmath>

namespace pisot {

Cps::Cps(PisotData pd) : pisot_(std::move(pd)) {
  pi1_ = embed(pisot_.left_eigenvector, pisot_.lambda);

  if (pisot_.complex_conjugates()) {
    // W identified with C via the conjugate of positive imaginary part.
    const std::complex<double> mu = pisot_.conjugates[0];
    const auto z = embed(pisot_.left_eigenvector, mu);
    for (std::size_t j = 0; j < 3; ++j) {
      pi2_[0][j] = z[j].real();
      pi2_[1][j] = z[j].imag();
    }
    a_w_ = {mu.real(), -mu.imag(), mu.imag(), mu.real()};
    complex_internal_ = true;
  } else {
    const double mu0 = pisot_.conjugates[0].real();
    const double mu1 = pisot_.conjugates[1].real();
    pi2_[0] = embed(pisot_.left_eigenvector, mu0);
    pi2_[1] = embed(pisot_.left_eigenvector, mu1);
    a_w_ = {mu0, 0.0, 0.0, mu1};
    complex_internal_ = false;
  }
  for (std::size_t g = 0; g < 3; ++g) star_basis_[g] = {pi2_[0][g], pi2_[1][g]};
}

Point2 Cps::star(const IntVector3& v) const {
  Point2 p;
  for (std::size_t j = 0; j < 3; ++j) p += static_cast<double>(v[j]) * star_basis_[j];
  return p;
}

double Cps::project_phys(const IntVector3& v) const {
  double s = 0.0;
  for (std::size_t j = 0; j < 3; ++j) s += pi1_[j] * static_cast<double>(v[j]);
  return s;
}

double Cps::spectral_radius_estimate(int iterations) const {
  // Norm growth of a generic vector; for a rotation-scaling the ratio is exact.
  Point2 v{1.0, 0.6180339887};
  double rate = 0.0;
  for (int i = 0; i < iterations; ++i) {
    const Point2 w = a_w_ * v;
    rate = norm(w) / norm(v);
    v = (1.0 / norm(w)) * w;
  }
  return rate;
}

Cps build_cps(const PisotData& pd) { return Cps(pd); }

}  // namespace pisot
