#include "pisot/int_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "pisot/error.hpp"

namespace pisot {

IntMatrix3 IntMatrix3::from_rows(const std::array<IntVector3, 3>& rows) {
  IntMatrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

IntMatrix3 IntMatrix3::from_columns(const std::array<IntVector3, 3>& cols) {
  return from_rows(cols).transpose();
}

std::int64_t IntMatrix3::determinant() const {
  const auto& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

std::int64_t IntMatrix3::minor_sum() const {
  const auto& m = *this;
  return (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) +
         (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) +
         (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
}

IntMatrix3 IntMatrix3::adjugate() const {
  const auto& m = *this;
  IntMatrix3 adj;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      // cyclic index order absorbs the cofactor sign
      adj(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  }
  return adj;
}

IntMatrix3 IntMatrix3::transpose() const {
  IntMatrix3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
  return t;
}

IntMatrix3 IntMatrix3::power(int k) const {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "negative matrix power");
  IntMatrix3 r = identity();
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::int64_t IntMatrix3::min_entry() const { return *std::min_element(a_.begin(), a_.end()); }

IntMatrix3 IntMatrix3::operator*(const IntMatrix3& rhs) const {
  IntMatrix3 p;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < 3; ++k) s += (*this)(i, k) * rhs(k, j);
      p(i, j) = s;
    }
  return p;
}

IntMatrix3 IntMatrix3::operator+(const IntMatrix3& rhs) const {
  IntMatrix3 s;
  for (std::size_t i = 0; i < 9; ++i) s.a_[i] = a_[i] + rhs.a_[i];
  return s;
}

IntMatrix3 IntMatrix3::operator*(std::int64_t s) const {
  IntMatrix3 r;
  for (std::size_t i = 0; i < 9; ++i) r.a_[i] = a_[i] * s;
  return r;
}

IntVector3 IntMatrix3::operator*(const IntVector3& v) const {
  IntVector3 r{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r[static_cast<std::size_t>(i)] += (*this)(i, k) * v[static_cast<std::size_t>(k)];
  return r;
}

std::string IntMatrix3::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < 3; ++i) {
    if (i) os << ',';
    os << vector_str(row(i));
  }
  os << ']';
  return os.str();
}

IntVector3 row_times(const IntVector3& v, const IntMatrix3& m) {
  return m.transpose() * v;
}

IntVector3 abelianize(const Word& w) {
  const auto v = abelianize_word(w, 3);
  return {v[0], v[1], v[2]};
}

IntMatrix3 abelianization(const Endomorphism& phi) {
  if (phi.rank() != 3) {
    throw Error(ErrorCode::invalid_argument, "abelianization matrix needs rank 3");
  }
  return IntMatrix3::from_columns(
      {abelianize(phi.image(0)), abelianize(phi.image(1)), abelianize(phi.image(2))});
}

std::string vector_str(const IntVector3& v) {
  std::ostringstream os;
  os << '[' << v[0] << ',' << v[1] << ',' << v[2] << ']';
  return os.str();
}

}  // namespace pisot
