#pragma once

#include <array>
#include <complex>

#include "pisot/matrix_analysis.hpp"
#include "pisot/number_field.hpp"

namespace pisot {

using FieldVector3 = std::array<FieldElement, 3>;

/// Spectral data of a unimodular Pisot matrix. Eigenvector entries live in
/// Q(L), L being the Perron-Frobenius root of `charpoly`.
struct PisotData {
  IntMatrix3 matrix;
  CubicPoly charpoly;
  std::int64_t determinant = 0;
  int wielandt_exponent = 0;
  double lambda = 0.0;
  /// Galois conjugates of lambda; a complex pair is stored positive-imaginary first.
  std::array<std::complex<double>, 2> conjugates;
  /// l M = L l, normalized so l_a = 1 (tile lengths).
  FieldVector3 left_eigenvector;
  /// M r = L r, normalized so r_a = 1 (unnormalized frequencies).
  FieldVector3 right_eigenvector;

  bool complex_conjugates() const { return conjugates[0].imag() != 0.0; }
};

/// Throws NegativeEntry, NotPrimitive, NotUnimodular, NotIrreducible or NotPisot.
PisotData pisot_check(const IntMatrix3& m);

/// Left PF eigenvector with the length of tile a equal to 1.
FieldVector3 tile_lengths(const PisotData& pd);

/// Right PF eigenvector scaled to sum 1, evaluated at lambda.
std::array<double, 3> frequencies(const PisotData& pd);

std::array<double, 3> embed(const FieldVector3& v, double root);
std::array<std::complex<double>, 3> embed(const FieldVector3& v, std::complex<double> root);

/// v M, exact.
FieldVector3 row_times(const FieldVector3& v, const IntMatrix3& m);
/// M v, exact.
FieldVector3 times_column(const IntMatrix3& m, const FieldVector3& v);

}  // namespace pisot
