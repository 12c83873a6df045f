#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "pisot/int_matrix.hpp"

namespace pisot {

/// Monic integer cubic x^3 + c2 x^2 + c1 x + c0.
struct CubicPoly {
  std::int64_t c0 = 0;
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;

  template <typename T>
  T operator()(T x) const {
    return ((x + T(static_cast<double>(c2))) * x + T(static_cast<double>(c1))) * x +
           T(static_cast<double>(c0));
  }
  template <typename T>
  T derivative(T x) const {
    return (T(3.0) * x + T(2.0 * static_cast<double>(c2))) * x + T(static_cast<double>(c1));
  }

  std::int64_t evaluate(std::int64_t x) const { return ((x + c2) * x + c1) * x + c0; }
  IntMatrix3 evaluate(const IntMatrix3& m) const;

  /// "x^3 - x^2 - x - 1"
  std::string str() const;

  friend bool operator==(const CubicPoly&, const CubicPoly&) = default;
};

CubicPoly char_poly(const IntMatrix3& m);

bool is_unimodular(const IntMatrix3& m);

/// Smallest k <= 5 with m^k strictly positive; nullopt if none.
/// Throws NegativeEntry for a matrix with a negative entry.
std::optional<int> primitivity_exponent(const IntMatrix3& m);
bool is_primitive(const IntMatrix3& m);

bool is_irreducible_cubic(const CubicPoly& p);

/// Real roots first in decreasing order, then a complex pair with the
/// positive-imaginary member first.
std::array<std::complex<double>, 3> cubic_roots(const CubicPoly& p);

}  // namespace pisot
