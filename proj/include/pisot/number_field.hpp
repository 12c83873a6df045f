#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <string>

#include "pisot/matrix_analysis.hpp"

namespace pisot {

using Rational = mpq_class;

/// Element q0 + q1 t + q2 t^2 of Q[t]/(p), where p is an irreducible monic
/// cubic and t stands for any of its roots. Coefficients are exact.
class FieldElement {
 public:
  explicit FieldElement(const CubicPoly& modulus) : modulus_(modulus) {}
  FieldElement(const CubicPoly& modulus, Rational q0, Rational q1 = 0, Rational q2 = 0);

  /// The class of t itself.
  static FieldElement generator(const CubicPoly& modulus);

  const CubicPoly& modulus() const { return modulus_; }
  const Rational& coefficient(int i) const { return c_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator*(const Rational& s) const;
  /// Throws DivisionByZero.
  FieldElement inverse() const;
  FieldElement operator/(const FieldElement& rhs) const { return *this * rhs.inverse(); }

  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
  FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  /// Value under the embedding t -> root.
  double embed(double root) const;
  std::complex<double> embed(std::complex<double> root) const;

  /// e.g. "-1 - L + L^2" with L the generator.
  std::string str() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.modulus_ == b.modulus_ && a.c_ == b.c_;
  }

 private:
  void check_same_field(const FieldElement& rhs) const;

  CubicPoly modulus_;
  std::array<Rational, 3> c_{};
};

FieldElement operator*(const Rational& s, const FieldElement& e);

}  // namespace pisot
