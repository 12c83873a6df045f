#include "pisot/number_field.hpp"

#include <sstream>
#include <vector>

#include "pisot/error.hpp"

namespace pisot {

namespace {

/// Dense polynomial over Q, lowest degree first, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

void divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
  rem = num;
  quot.assign(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
  while (!rem.empty() && rem.size() >= den.size()) {
    const std::size_t shift = rem.size() - den.size();
    const Rational f = rem.back() / den.back();
    quot[shift] = f;
    for (std::size_t i = 0; i < den.size(); ++i) rem[shift + i] -= f * den[i];
    trim(rem);
  }
  trim(quot);
}

Poly modulus_poly(const CubicPoly& p) {
  return {Rational(p.c0), Rational(p.c1), Rational(p.c2), Rational(1)};
}

}  // namespace

FieldElement::FieldElement(const CubicPoly& modulus, Rational q0, Rational q1, Rational q2)
    : modulus_(modulus), c_{std::move(q0), std::move(q1), std::move(q2)} {
  for (auto& q : c_) q.canonicalize();
}

FieldElement FieldElement::generator(const CubicPoly& modulus) {
  return FieldElement(modulus, 0, 1, 0);
}

bool FieldElement::is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }

void FieldElement::check_same_field(const FieldElement& rhs) const {
  if (!(modulus_ == rhs.modulus_)) {
    throw Error(ErrorCode::invalid_argument, "field elements over different moduli");
  }
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  check_same_field(rhs);
  return FieldElement(modulus_, c_[0] + rhs.c_[0], c_[1] + rhs.c_[1], c_[2] + rhs.c_[2]);
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  check_same_field(rhs);
  return FieldElement(modulus_, c_[0] - rhs.c_[0], c_[1] - rhs.c_[1], c_[2] - rhs.c_[2]);
}

FieldElement FieldElement::operator-() const {
  return FieldElement(modulus_, -c_[0], -c_[1], -c_[2]);
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  check_same_field(rhs);
  std::array<Rational, 5> prod;
  for (auto& q : prod) q = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) prod[i + j] += c_[i] * rhs.c_[j];
  // t^3 = -c2 t^2 - c1 t - c0, applied from the top degree down
  const Rational m0(modulus_.c0), m1(modulus_.c1), m2(modulus_.c2);
  for (std::size_t d = 4; d >= 3; --d) {
    const Rational top = prod[d];
    prod[d] = 0;
    prod[d - 1] -= top * m2;
    prod[d - 2] -= top * m1;
    prod[d - 3] -= top * m0;
  }
  return FieldElement(modulus_, prod[0], prod[1], prod[2]);
}

FieldElement FieldElement::operator*(const Rational& s) const {
  return FieldElement(modulus_, c_[0] * s, c_[1] * s, c_[2] * s);
}

FieldElement operator*(const Rational& s, const FieldElement& e) { return e * s; }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero in Q(t)");
  // Extended Euclid: track s with s * a == r (mod p).
  Poly r0 = modulus_poly(modulus_);
  Poly r1(c_.begin(), c_.end());
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    Poly q, rem;
    divmod(r0, r1, q, rem);
    Poly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) {
    // common factor with the modulus; cannot happen for an irreducible cubic
    throw Error(ErrorCode::division_by_zero, "element not invertible; modulus is reducible");
  }
  const Rational scale = 1 / r1[0];
  Poly q, rem;
  divmod(s1, modulus_poly(modulus_), q, rem);
  rem.resize(3, Rational(0));
  return FieldElement(modulus_, rem[0] * scale, rem[1] * scale, rem[2] * scale);
}

double FieldElement::embed(double root) const {
  return c_[0].get_d() + root * (c_[1].get_d() + root * c_[2].get_d());
}

std::complex<double> FieldElement::embed(std::complex<double> root) const {
  return c_[0].get_d() + root * (c_[1].get_d() + root * c_[2].get_d());
}

std::string FieldElement::str() const {
  if (is_zero()) return "0";
  static constexpr const char* kMonomial[3] = {"", "L", "L^2"};
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational& q = c_[i];
    if (q == 0) continue;
    const bool negative = q < 0;
    const Rational mag = abs(q);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << kMonomial[i];
    }
    first = false;
  }
  return os.str();
}

}  // namespace pisot
