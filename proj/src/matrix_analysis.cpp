#include "pisot/matrix_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "pisot/error.hpp"

namespace pisot {

namespace {

constexpr int kWielandtBound = 5;

void append_term(std::ostringstream& os, std::int64_t coeff, const char* monomial, bool first) {
  if (coeff == 0) return;
  const bool negative = coeff < 0;
  const auto mag = std::llabs(coeff);
  if (first) {
    if (negative) os << '-';
  } else {
    os << (negative ? " - " : " + ");
  }
  if (monomial[0] == '\0') {
    os << mag;
  } else {
    if (mag != 1) os << mag;
    os << monomial;
  }
}

double real_root(const CubicPoly& p) {
  // Cauchy bound brackets every real root.
  const double bound = 1.0 + std::max({std::fabs(static_cast<double>(p.c0)),
                                       std::fabs(static_cast<double>(p.c1)),
                                       std::fabs(static_cast<double>(p.c2))});
  double lo = -bound, hi = bound;
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (p(mid) > 0.0) hi = mid; else lo = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    const double d = p.derivative(x);
    if (d == 0.0) break;
    const double step = p(x) / d;
    x -= step;
    if (std::fabs(step) < 1e-16 * std::max(1.0, std::fabs(x))) break;
  }
  return x;
}

std::complex<double> polish(const CubicPoly& p, std::complex<double> z) {
  for (int it = 0; it < 6; ++it) {
    const auto d = p.derivative(z);
    if (std::abs(d) < 1e-14) break;
    const auto next = z - p(z) / d;
    if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
    if (std::abs(p(next)) > std::abs(p(z))) break;
    z = next;
  }
  return z;
}

}  // namespace

IntMatrix3 CubicPoly::evaluate(const IntMatrix3& m) const {
  const IntMatrix3 i = IntMatrix3::identity();
  return ((m + i * c2) * m + i * c1) * m + i * c0;
}

std::string CubicPoly::str() const {
  std::ostringstream os;
  os << "x^3";
  append_term(os, c2, "x^2", false);
  append_term(os, c1, "x", false);
  append_term(os, c0, "", false);
  return os.str();
}

CubicPoly char_poly(const IntMatrix3& m) {
  return {-m.determinant(), m.minor_sum(), -m.trace()};
}

bool is_unimodular(const IntMatrix3& m) { return std::llabs(m.determinant()) == 1; }

std::optional<int> primitivity_exponent(const IntMatrix3& m) {
  if (m.min_entry() < 0) {
    throw Error(ErrorCode::negative_entry, "matrix " + m.str() + " has a negative entry");
  }
  IntMatrix3 p = m;
  for (int k = 1; k <= kWielandtBound; ++k) {
    if (p.min_entry() > 0) return k;
    p = p * m;
  }
  return std::nullopt;
}

bool is_primitive(const IntMatrix3& m) { return primitivity_exponent(m).has_value(); }

bool is_irreducible_cubic(const CubicPoly& p) {
  // A monic integer cubic is reducible over Q iff it has an integer root,
  // which must divide c0.
  if (p.c0 == 0) return false;
  const std::int64_t n = std::llabs(p.c0);
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    for (std::int64_t cand : {d, -d, n / d, -(n / d)}) {
      if (p.evaluate(cand) == 0) return false;
    }
  }
  return true;
}

std::array<std::complex<double>, 3> cubic_roots(const CubicPoly& p) {
  const double r = real_root(p);
  // Deflate: x^3 + c2 x^2 + c1 x + c0 = (x - r)(x^2 + b x + c).
  const double b = static_cast<double>(p.c2) + r;
  const double c = static_cast<double>(p.c1) + r * b;
  const double disc = b * b - 4.0 * c;

  std::array<std::complex<double>, 3> roots;
  if (disc >= 0.0) {
    const double sq = std::sqrt(disc);
    // numerically stable quadratic
    const double q = -0.5 * (b + std::copysign(sq, b));
    double r1 = q, r2 = q;
    if (q != 0.0) r2 = c / q; else r1 = r2 = 0.0;
    std::array<double, 3> real{r, r1, r2};
    for (auto& x : real) x = polish(p, x).real();
    std::sort(real.begin(), real.end(), std::greater<>());
    for (std::size_t i = 0; i < 3; ++i) roots[i] = real[i];
  } else {
    const std::complex<double> z = polish(p, {-0.5 * b, 0.5 * std::sqrt(-disc)});
    roots[0] = polish(p, std::complex<double>(r, 0.0)).real();
    roots[1] = {z.real(), std::fabs(z.imag())};
    roots[2] = std::conj(roots[1]);
  }
  return roots;
}

}  // namespace pisot
