#include <doctest.h>

#include "fixtures.hpp"
#include "pisot/error.hpp"
#include "pisot/matrix_analysis.hpp"
#include "pisot/number_field.hpp"
#include "pisot/pisot_data.hpp"

using namespace pisot;
using namespace fx;
using doctest::Approx;

namespace {
const CubicPoly kTrib{-1, -1, -1};  // x^3 - x^2 - x - 1
const CubicPoly kPlastic{-1, -1, 0};
const CubicPoly kCubeOne{-1, 3, -3};

IntMatrix3 M(const Substitution& s) { return abelianization(s.map()); }
}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("IntMatrix3 basics") {
  const IntMatrix3 U = abelianization(u1);
  CHECK(U.determinant() == 1);
  CHECK(U.power(3) == M(sA));
  CHECK(U * U.adjugate() == IntMatrix3::identity() * U.determinant());
  CHECK(U.transpose().transpose() == U);
  CHECK(U.power(0) == IntMatrix3::identity());
  CHECK(M(s1).trace() == 1);
  CHECK(M(s1).str() == "[[0,0,1],[1,0,1],[1,1,1]]");
}

TEST_CASE("char_poly") {
  CHECK(char_poly(M(s2)) == kTrib);
  CHECK(char_poly(IntMatrix3::identity()) == kCubeOne);
  CHECK(char_poly(M(s1)) == CubicPoly{-1, -2, -1});
  CHECK(char_poly(M(s1)).str() == "x^3 - x^2 - 2x - 1");
  CHECK(char_poly(M(sA)) == CubicPoly{-1, 2, -3});
  for (const auto* s : all_subs) CHECK(char_poly(M(*s)).evaluate(M(*s)) == IntMatrix3());
}

TEST_CASE("is_unimodular") {
  CHECK(is_unimodular(M(s2)));
  CHECK_FALSE(is_unimodular(IntMatrix3::identity() * 2));
  CHECK(is_unimodular(abelianization(u1)));
}

TEST_CASE("is_primitive with witness") {
  CHECK(is_primitive(M(s2)));
  CHECK(primitivity_exponent(M(s2)).value() <= 5);
  const IntMatrix3 cyclic = IntMatrix3::from_rows({IntVector3{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  CHECK_FALSE(is_primitive(cyclic));
  CHECK(is_primitive(M(sA)));
  CHECK(primitivity_exponent(IntMatrix3::from_rows({IntVector3{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})) ==
        1);
  CHECK_THROWS_AS(is_primitive(abelianization(rho2)), Error);
}

TEST_CASE("is_irreducible_cubic") {
  CHECK(is_irreducible_cubic(kTrib));
  CHECK_FALSE(is_irreducible_cubic(kCubeOne));
  CHECK(is_irreducible_cubic(kPlastic));
  CHECK_FALSE(is_irreducible_cubic(CubicPoly{0, -1, 0}));  // x^3 - x
  CHECK_FALSE(is_irreducible_cubic(CubicPoly{-6, 11, -6}));
}

TEST_CASE("cubic_roots") {
  auto r = cubic_roots(kTrib);
  CHECK(r[0].real() == Approx(1.8392867552141612).epsilon(1e-13));
  CHECK(r[0].imag() == 0.0);
  CHECK(r[1].real() == Approx(-0.41964337760708).epsilon(1e-12));
  CHECK(r[1].imag() == Approx(0.60629072920719).epsilon(1e-12));
  CHECK(r[2] == std::conj(r[1]));
  r = cubic_roots(kPlastic);
  CHECK(r[0].real() == Approx(1.3247179572447460).epsilon(1e-13));
  CHECK(r[1].imag() > 0);
  r = cubic_roots(kCubeOne);
  for (const auto& z : r) CHECK(std::abs(z - 1.0) < 1e-4);
  r = cubic_roots(CubicPoly{-6, 11, -6});
  CHECK(r[0].real() == Approx(3.0));
  CHECK(r[1].real() == Approx(2.0));
  CHECK(r[2].real() == Approx(1.0));
}

TEST_CASE("cubic_roots residuals on random cubics (property)") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<std::int64_t> coef(-20, 20);
  for (int trial = 0; trial < 500; ++trial) {
    const CubicPoly p{coef(rng), coef(rng), coef(rng)};
    const auto r = cubic_roots(p);
    for (const auto& z : r) {
      const double scale = 1.0 + std::pow(std::abs(z), 3);
      CHECK(std::abs(p(z)) / scale < 1e-8);
    }
    // Vieta
    const auto sum = r[0] + r[1] + r[2];
    CHECK(std::abs(sum + static_cast<double>(p.c2)) < 1e-6 * (1 + std::abs(sum)));
  }
}

}  // TEST_SUITE

TEST_SUITE("number_field") {

TEST_CASE("field arithmetic in Q(lambda)") {
  const FieldElement L = FieldElement::generator(kTrib);
  const FieldElement one(kTrib, 1);
  CHECK(L.inverse() == L * L - L - one);
  CHECK(L * (L * L) == L * L + L + one);
  CHECK(L.embed(1.8392867552141612) == Approx(1.8392867552141612));
  CHECK((L * L.inverse()) == one);
  CHECK((L - L).is_zero());
  CHECK_THROWS_AS(FieldElement(kTrib, 0).inverse(), Error);
  CHECK_THROWS_AS(L + FieldElement::generator(kPlastic), Error);
  CHECK((L * L - L - one).str() == "-1 - L + L^2");
  CHECK((Rational(1, 2) * L).coefficient(1) == Rational(1, 2));
}

TEST_CASE("field axioms on random elements (property)") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> q(-9, 9), d(1, 5);
  auto rnd = [&] {
    return FieldElement(kPlastic, Rational(q(rng), d(rng)), Rational(q(rng), d(rng)),
                        Rational(q(rng), d(rng)));
  };
  const double root = 1.3247179572447460;
  for (int trial = 0; trial < 200; ++trial) {
    const FieldElement x = rnd(), y = rnd(), z = rnd();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == FieldElement(kPlastic, 1));
      CHECK((y / x) * x == y);
    }
    CHECK((x * y).embed(root) == Approx(x.embed(root) * y.embed(root)).epsilon(1e-9));
  }
}

}  // TEST_SUITE

TEST_SUITE("pisot") {

TEST_CASE("pisot_check on the Tribonacci matrix") {
  const PisotData pd = pisot_check(M(s2p));
  CHECK(pd.lambda == Approx(1.8392867552141612).epsilon(1e-12));
  CHECK(std::abs(pd.conjugates[0]) == Approx(0.7373527057603).epsilon(1e-10));
  CHECK(std::abs(pd.conjugates[0]) * std::abs(pd.conjugates[0]) ==
        Approx(1.0 / pd.lambda).epsilon(1e-12));
  CHECK(pd.complex_conjugates());
  CHECK(pd.determinant == 1);
}

TEST_CASE("pisot_check on sigma_A and errors") {
  const PisotData pd = pisot_check(M(sA));
  CHECK(pd.lambda == Approx(2.324717957244746).epsilon(1e-12));
  CHECK(pd.lambda == Approx(std::pow(1.3247179572447460, 3)).epsilon(1e-12));
  auto code_of = [](const IntMatrix3& m) {
    try {
      (void)pisot_check(m);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::invalid_argument;
  };
  CHECK(code_of(IntMatrix3::identity()) == ErrorCode::not_primitive);
  CHECK(code_of(IntMatrix3::from_rows({IntVector3{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})) ==
        ErrorCode::not_unimodular);
  CHECK(code_of(IntMatrix3::from_rows({IntVector3{-1, 1, 1}, {1, 1, 1}, {1, 1, 1}})) ==
        ErrorCode::negative_entry);
  // (x + 1)(x^2 - 2x - 1)
  CHECK(code_of(IntMatrix3::from_rows({IntVector3{0, 0, 1}, {1, 0, 1}, {2, 1, 1}})) ==
        ErrorCode::not_irreducible);
  // x^3 - 2x^2 - 4x + 1, totally real with a second root 1.39
  CHECK(code_of(IntMatrix3::from_rows({IntVector3{0, 0, 1}, {0, 1, 2}, {1, 2, 1}})) ==
        ErrorCode::not_pisot);
}

TEST_CASE("tile lengths of sigma2") {
  const PisotData pd = pisot_check(M(s2));
  const FieldVector3 l = tile_lengths(pd);
  const FieldElement L = FieldElement::generator(pd.charpoly), one(pd.charpoly, 1);
  CHECK(l[0] == one);
  CHECK(l[1] == L * L - L - one);
  CHECK(l[1] == L.inverse());
  CHECK(l[2] == L);
  const FieldVector3 lm = row_times(l, pd.matrix);
  for (int i = 0; i < 3; ++i) CHECK(lm[i] == L * l[i]);
}

TEST_CASE("eigen data for every fixture (property)") {
  for (const auto* s : all_subs) {
    const PisotData pd = pisot_check(M(*s));
    const FieldElement L = FieldElement::generator(pd.charpoly);
    const FieldVector3 lm = row_times(pd.left_eigenvector, pd.matrix);
    const FieldVector3 mr = times_column(pd.matrix, pd.right_eigenvector);
    for (int i = 0; i < 3; ++i) {
      CHECK(lm[i] == L * pd.left_eigenvector[i]);
      CHECK(mr[i] == L * pd.right_eigenvector[i]);
    }
    for (double v : embed(pd.left_eigenvector, pd.lambda)) CHECK(v > 0);
    const auto f = frequencies(pd);
    CHECK(f[0] + f[1] + f[2] == Approx(1.0));
    CHECK(std::abs(pd.charpoly(pd.lambda)) < 1e-12);
    CHECK(pd.wielandt_exponent <= 5);
  }
}

}  // TEST_SUITE
