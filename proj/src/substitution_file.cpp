#include <array>
#include <fstream>
#include <sstream>

#include "pisot/error.hpp"
#include "pisot/io.hpp"

namespace pisot {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string line_error(int line, const std::string& msg) {
  return "line " + std::to_string(line) + ": " + msg;
}

}  // namespace

Endomorphism parse_substitution(std::string_view text) {
  std::array<std::optional<Word>, 3> rules;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      throw Error(ErrorCode::parse_error, line_error(line_no, "expected 'x -> word'"));
    }
    const std::string_view lhs = trim(line.substr(0, arrow));
    const std::string_view rhs = trim(line.substr(arrow + 2));
    if (lhs.size() != 1 || lhs[0] < 'a' || lhs[0] > 'c') {
      throw Error(ErrorCode::parse_error,
                  line_error(line_no, "left side must be one of a, b, c"));
    }
    if (rhs.empty()) {
      throw Error(ErrorCode::parse_error, line_error(line_no, "empty right side (use 1)"));
    }
    Word w;
    try {
      w = Word::parse(rhs);
    } catch (const Error& e) {
      throw Error(ErrorCode::parse_error, line_error(line_no, e.what()));
    }
    if (w.max_generator() > 2) {
      throw Error(ErrorCode::parse_error, line_error(line_no, "letters beyond c"));
    }
    auto& slot = rules[static_cast<std::size_t>(lhs[0] - 'a')];
    if (slot) {
      throw Error(ErrorCode::duplicate_rule,
                  line_error(line_no, std::string("second rule for ") + lhs[0]));
    }
    slot = std::move(w);
  }
  std::vector<Word> images;
  for (std::size_t g = 0; g < 3; ++g) {
    if (!rules[g]) {
      throw Error(ErrorCode::missing_rule,
                  std::string("no rule for ") + generator_name(static_cast<int>(g)));
    }
    images.push_back(std::move(*rules[g]));
  }
  return Endomorphism(std::move(images));
}

std::string render_substitution(const Endomorphism& phi) {
  std::string out;
  for (int g = 0; g < phi.rank(); ++g) {
    out += generator_name(g);
    out += " -> ";
    out += phi.image(g).str();
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_error, "cannot write " + path);
  out << contents;
  if (!out) throw Error(ErrorCode::io_error, "write failed for " + path);
}

Endomorphism load_substitution(const std::string& path) {
  return parse_substitution(read_file(path));
}

std::string render_certificate(const ConjugacyCertificate& cert) {
  std::string out = "# kind: ";
  out += cert.kind == ConjugacyKind::inner ? "inner" : "outer";
  out += '\n';
  if (cert.kind == ConjugacyKind::inner) out += "# word: " + cert.inner_word.str() + '\n';
  out += "# inverse: " + cert.rho_inverse.str() + '\n';
  return out + render_substitution(cert.rho);
}

ConjugacyCertificate parse_certificate(std::string_view text) {
  ConjugacyCertificate cert{ConjugacyKind::outer, parse_substitution(text),
                            Endomorphism::identity(), Word()};
  bool have_kind = false, have_inverse = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view l = trim(line);
    if (!l.starts_with('#')) continue;
    l = trim(l.substr(1));
    if (l.starts_with("kind:")) {
      const auto v = trim(l.substr(5));
      if (v == "inner") cert.kind = ConjugacyKind::inner;
      else if (v == "outer") cert.kind = ConjugacyKind::outer;
      else throw Error(ErrorCode::parse_error, "unknown certificate kind");
      have_kind = true;
    } else if (l.starts_with("word:")) {
      cert.inner_word = Word::parse(trim(l.substr(5)));
    } else if (l.starts_with("inverse:")) {
      std::string_view v = trim(l.substr(8));
      if (v.size() < 2 || v.front() != '[' || v.back() != ']') {
        throw Error(ErrorCode::parse_error, "inverse must look like [x,y,z]");
      }
      v = v.substr(1, v.size() - 2);
      std::vector<Word> images;
      while (true) {
        const auto comma = v.find(',');
        images.push_back(Word::parse(trim(v.substr(0, comma))));
        if (comma == std::string_view::npos) break;
        v = v.substr(comma + 1);
      }
      cert.rho_inverse = Endomorphism(std::move(images));
      have_inverse = true;
    }
  }
  if (!have_kind || !have_inverse) {
    throw Error(ErrorCode::parse_error, "certificate needs '# kind:' and '# inverse:' tags");
  }
  return cert;
}

}  // namespace pisot
