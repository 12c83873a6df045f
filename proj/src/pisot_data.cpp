#include "pisot/pisot_data.hpp"

#include <cmath>

#include "pisot/error.hpp"

namespace pisot {

namespace {

constexpr double kPisotMargin = 1e-9;

using FieldMatrix3 = std::array<std::array<FieldElement, 3>, 3>;

FieldMatrix3 shifted(const IntMatrix3& m, const FieldElement& t) {
  const CubicPoly& p = t.modulus();
  FieldMatrix3 a{{{FieldElement(p), FieldElement(p), FieldElement(p)},
                  {FieldElement(p), FieldElement(p), FieldElement(p)},
                  {FieldElement(p), FieldElement(p), FieldElement(p)}}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      a[i][j] = FieldElement(p, Rational(m(static_cast<int>(i), static_cast<int>(j))));
      if (i == j) a[i][j] -= t;
    }
  return a;
}

FieldMatrix3 adjugate(const FieldMatrix3& a) {
  FieldMatrix3 adj = a;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[i][j] = a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
    }
  return adj;
}

FieldVector3 normalized(FieldVector3 v) {
  const FieldElement inv = v[0].inverse();
  for (auto& e : v) e *= inv;
  return v;
}

bool is_zero(const FieldVector3& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

}  // namespace

FieldVector3 row_times(const FieldVector3& v, const IntMatrix3& m) {
  const CubicPoly& p = v[0].modulus();
  FieldVector3 r{FieldElement(p), FieldElement(p), FieldElement(p)};
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i)
      r[j] += v[i] * Rational(m(static_cast<int>(i), static_cast<int>(j)));
  return r;
}

FieldVector3 times_column(const IntMatrix3& m, const FieldVector3& v) {
  const CubicPoly& p = v[0].modulus();
  FieldVector3 r{FieldElement(p), FieldElement(p), FieldElement(p)};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      r[i] += v[j] * Rational(m(static_cast<int>(i), static_cast<int>(j)));
  return r;
}

PisotData pisot_check(const IntMatrix3& m) {
  const auto exponent = primitivity_exponent(m);
  if (!exponent) {
    throw Error(ErrorCode::not_primitive,
                "no power up to 5 of " + m.str() + " is strictly positive");
  }
  if (!is_unimodular(m)) {
    throw Error(ErrorCode::not_unimodular,
                "determinant of " + m.str() + " is " + std::to_string(m.determinant()));
  }
  const CubicPoly p = char_poly(m);
  if (!is_irreducible_cubic(p)) {
    throw Error(ErrorCode::not_irreducible, p.str() + " has a rational root");
  }

  const auto roots = cubic_roots(p);
  // PF root of a primitive matrix is the real root of largest modulus.
  std::size_t pf = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (roots[i].imag() == 0.0 && roots[i].real() > roots[pf].real()) pf = i;
  }
  PisotData pd{.matrix = m, .charpoly = p, .determinant = m.determinant(),
               .wielandt_exponent = *exponent, .lambda = roots[pf].real(),
               .conjugates = {}, .left_eigenvector = {FieldElement(p), FieldElement(p), FieldElement(p)},
               .right_eigenvector = {FieldElement(p), FieldElement(p), FieldElement(p)}};
  std::size_t k = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != pf) pd.conjugates[k++] = roots[i];
  }
  if (!(pd.lambda > 1.0)) {
    throw Error(ErrorCode::not_pisot, "leading root " + std::to_string(pd.lambda) + " is not > 1");
  }
  for (const auto& c : pd.conjugates) {
    if (!(std::abs(c) < 1.0 - kPisotMargin)) {
      throw Error(ErrorCode::not_pisot,
                  "conjugate of modulus " + std::to_string(std::abs(c)) + " is not < 1");
    }
  }

  const FieldMatrix3 adj = adjugate(shifted(m, FieldElement::generator(p)));
  // (M - L I) adj = adj (M - L I) = 0: columns are right, rows are left eigenvectors.
  for (std::size_t j = 0; j < 3; ++j) {
    FieldVector3 col{adj[0][j], adj[1][j], adj[2][j]};
    if (!is_zero(col)) {
      pd.right_eigenvector = normalized(col);
      break;
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (!is_zero(adj[i])) {
      pd.left_eigenvector = normalized(adj[i]);
      break;
    }
  }
  return pd;
}

FieldVector3 tile_lengths(const PisotData& pd) { return pd.left_eigenvector; }

std::array<double, 3> frequencies(const PisotData& pd) {
  auto r = embed(pd.right_eigenvector, pd.lambda);
  const double total = r[0] + r[1] + r[2];
  for (auto& x : r) x /= total;
  return r;
}

std::array<double, 3> embed(const FieldVector3& v, double root) {
  return {v[0].embed(root), v[1].embed(root), v[2].embed(root)};
}

std::array<std::complex<double>, 3> embed(const FieldVector3& v, std::complex<double> root) {
  return {v[0].embed(root), v[1].embed(root), v[2].embed(root)};
}

}  // namespace pisot
