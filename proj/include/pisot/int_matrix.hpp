#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "pisot/word.hpp"

namespace pisot {

using IntVector3 = std::array<std::int64_t, 3>;

/// Exact 3x3 integer matrix, row-major.
class IntMatrix3 {
 public:
  constexpr IntMatrix3() = default;
  constexpr IntMatrix3(std::array<std::int64_t, 9> entries) : a_(entries) {}

  static IntMatrix3 from_rows(const std::array<IntVector3, 3>& rows);
  static IntMatrix3 from_columns(const std::array<IntVector3, 3>& cols);
  static constexpr IntMatrix3 identity() { return IntMatrix3({1, 0, 0, 0, 1, 0, 0, 0, 1}); }

  std::int64_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(3 * i + j)]; }
  std::int64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(3 * i + j)]; }

  IntVector3 column(int j) const { return {(*this)(0, j), (*this)(1, j), (*this)(2, j)}; }
  IntVector3 row(int i) const { return {(*this)(i, 0), (*this)(i, 1), (*this)(i, 2)}; }

  std::int64_t trace() const { return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2); }
  std::int64_t determinant() const;
  /// Sum of the principal 2x2 minors.
  std::int64_t minor_sum() const;
  IntMatrix3 adjugate() const;
  IntMatrix3 transpose() const;
  IntMatrix3 power(int k) const;
  std::int64_t min_entry() const;

  IntMatrix3 operator*(const IntMatrix3& rhs) const;
  IntMatrix3 operator+(const IntMatrix3& rhs) const;
  IntMatrix3 operator*(std::int64_t s) const;
  IntVector3 operator*(const IntVector3& v) const;

  std::string str() const;

  friend bool operator==(const IntMatrix3&, const IntMatrix3&) = default;

 private:
  std::array<std::int64_t, 9> a_{};
};

/// Row vector times matrix.
IntVector3 row_times(const IntVector3& v, const IntMatrix3& m);

IntVector3 abelianize(const Word& w);
/// Column j = signed letter counts of the image of letter j; rank 3 only.
IntMatrix3 abelianization(const Endomorphism& phi);

std::string vector_str(const IntVector3& v);

}  // namespace pisot
