#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pisot/pisot_data.hpp"
#include "pisot/relations.hpp"
#include "pisot/tiling.hpp"
#include "pisot/window.hpp"
#include "pisot/word.hpp"

namespace pisot {

/// Lines "x -> word" for x in a, b, c; uppercase letters are inverses, "1" is
/// the empty word, '#' starts a comment. Throws ParseError (with line number),
/// MissingRule or DuplicateRule.
Endomorphism parse_substitution(std::string_view text);
std::string render_substitution(const Endomorphism& phi);

/// Reads a file and parses it; throws IoError if it cannot be read.
Endomorphism load_substitution(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// Substitution-file text for rho, preceded by "# kind:", "# word:" and
/// "# inverse:" tag lines. The body parses back to rho.
std::string render_certificate(const ConjugacyCertificate& cert);
ConjugacyCertificate parse_certificate(std::string_view text);

struct AnalysisReport {
  Endomorphism map;
  IntMatrix3 matrix;
  CubicPoly charpoly;
  std::int64_t determinant = 0;
  std::optional<int> primitivity_exponent;
  bool pisot = false;
  std::string verdict;
  std::optional<PisotData> data;
};

AnalysisReport analyze(const Endomorphism& phi);
/// "key: value" lines in a fixed order.
std::string render_report(const AnalysisReport& report);

std::string render_window_svg(const WindowApprox& wa);
std::string render_tiling_svg(const TilingPatch& patch);
std::string render_polylines_text(const WindowApprox& wa);

}  // namespace pisot
