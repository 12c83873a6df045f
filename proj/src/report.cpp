#include <cstdio>
#include <sstream>

#include "pisot/cps.hpp"
#include "pisot/error.hpp"
#include "pisot/io.hpp"

namespace pisot {

namespace {

std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

std::string complex_str(std::complex<double> z) {
  if (z.imag() == 0.0) return fixed(z.real());
  return fixed(z.real()) + (z.imag() < 0 ? " - " : " + ") + fixed(std::abs(z.imag())) + "i";
}

template <typename Range, typename F>
std::string join(const Range& r, F f) {
  std::string s;
  bool first = true;
  for (const auto& x : r) {
    if (!first) s += ", ";
    s += f(x);
    first = false;
  }
  return s;
}

}  // namespace

AnalysisReport analyze(const Endomorphism& phi) {
  AnalysisReport r{.map = phi, .matrix = abelianization(phi), .charpoly = {},
                   .determinant = 0, .primitivity_exponent = std::nullopt,
                   .pisot = false, .verdict = {}, .data = std::nullopt};
  r.charpoly = char_poly(r.matrix);
  r.determinant = r.matrix.determinant();
  try {
    r.primitivity_exponent = primitivity_exponent(r.matrix);
  } catch (const Error&) {
  }
  try {
    r.data = pisot_check(r.matrix);
    r.pisot = true;
    r.verdict = "Pisot";
  } catch (const Error& e) {
    r.verdict = std::string("not Pisot (") + e.what() + ")";
  }
  return r;
}

std::string render_report(const AnalysisReport& r) {
  std::ostringstream os;
  os << "map: " << r.map.str() << '\n';
  os << "substitution: " << (r.map.is_substitution() ? "yes" : "no") << '\n';
  os << "matrix: " << r.matrix.str() << '\n';
  os << "charpoly: " << r.charpoly.str() << '\n';
  os << "determinant: " << r.determinant << '\n';
  os << "unimodular: " << (is_unimodular(r.matrix) ? "yes" : "no") << '\n';
  os << "primitive: ";
  if (r.primitivity_exponent) os << "yes (exponent " << *r.primitivity_exponent << ")\n";
  else os << "no\n";
  os << "irreducible: " << (is_irreducible_cubic(r.charpoly) ? "yes" : "no") << '\n';
  os << "verdict: " << r.verdict << '\n';
  if (!r.data) return os.str();

  const PisotData& pd = *r.data;
  const Cps cps(pd);
  os << "lambda: " << fixed(pd.lambda) << '\n';
  os << "conjugates: " << join(pd.conjugates, complex_str) << '\n';
  os << "conjugate_moduli: "
     << join(pd.conjugates, [](std::complex<double> z) { return fixed(std::abs(z)); }) << '\n';
  os << "internal_space: "
     << (cps.complex_internal() ? "complex (Re, Im at the conjugate with positive imaginary part)"
                                : "real (one row per real conjugate)")
     << '\n';
  os << "tile_lengths: " << join(pd.left_eigenvector, [](const FieldElement& e) { return e.str(); })
     << '\n';
  os << "tile_lengths_numeric: " << join(cps.pi1(), fixed) << '\n';
  os << "right_eigenvector: "
     << join(pd.right_eigenvector, [](const FieldElement& e) { return e.str(); }) << '\n';
  os << "frequencies: " << join(frequencies(pd), fixed) << '\n';
  return os.str();
}

}  // namespace pisot
