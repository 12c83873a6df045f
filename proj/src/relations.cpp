#include "pisot/relations.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pisot/error.hpp"
#include "pisot/int_matrix.hpp"
#include "pisot/kernels.hpp"
#include "pisot/nielsen.hpp"
#include "pisot/tiling.hpp"

namespace pisot {

namespace {

struct SearchState {
  Endomorphism rho;
  std::size_t parent;
  std::size_t move;
};

std::vector<Word> words_of_length(const std::vector<Word>& shorter, int rank) {
  std::vector<Word> out;
  for (const Word& w : shorter) {
    for (int g = 0; g < rank; ++g) {
      for (bool inv : {false, true}) {
        const Letter l{static_cast<std::uint8_t>(g), inv};
        if (!w.empty() && w.letters().back() == l.inverted()) continue;
        Word next = w;
        next.push(l);
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

std::optional<std::size_t> screen(std::size_t n, const std::function<bool(std::size_t)>& pred,
                                  bool parallel) {
  return parallel ? kernels::first_match(n, pred) : kernels::first_match_serial(n, pred);
}

FieldElement total_length(const Word& w, const FieldVector3& lengths) {
  FieldElement sum(lengths[0].modulus());
  const IntVector3 counts = abelianize(w);
  for (std::size_t i = 0; i < 3; ++i) sum += lengths[i] * Rational(counts[i]);
  return sum;
}

std::set<std::string> factors(const std::string& s, std::size_t k) {
  std::set<std::string> out;
  for (std::size_t i = 0; i + k <= s.size(); ++i) out.insert(s.substr(i, k));
  return out;
}

}  // namespace

bool check_conjugation(const Endomorphism& sigma1, const Endomorphism& sigma2,
                       const Endomorphism& rho, const Endomorphism& rho_inv) {
  if (!compose(rho, rho_inv).is_identity() || !compose(rho_inv, rho).is_identity()) {
    throw Error(ErrorCode::bad_inverse, rho_inv.str() + " is not the inverse of " + rho.str());
  }
  for (int g = 0; g < sigma1.rank(); ++g) {
    const Word img = rho_inv.apply(sigma2.apply(rho.image(g)));
    if (img != sigma1.image(g)) return false;
  }
  return true;
}

bool check_inner(const Endomorphism& sigma1, const Endomorphism& sigma2, const Word& w) {
  const Word w_inv = w.inverse();
  for (int g = 0; g < sigma1.rank(); ++g) {
    if (w_inv * sigma2.image(g) * w != sigma1.image(g)) return false;
  }
  return true;
}

Endomorphism inner_automorphism(const Word& w, int rank) {
  std::vector<Word> images;
  for (int g = 0; g < rank; ++g) images.push_back(w.inverse() * Word::generator(g) * w);
  return Endomorphism(std::move(images));
}

bool verify_certificate(const Endomorphism& sigma1, const Endomorphism& sigma2,
                        const ConjugacyCertificate& cert) {
  if (cert.kind == ConjugacyKind::inner) {
    return check_inner(sigma1, sigma2, cert.inner_word) &&
           cert.rho == inner_automorphism(cert.inner_word, sigma1.rank()) &&
           compose(cert.rho, sigma2) == sigma1;
  }
  return check_conjugation(sigma1, sigma2, cert.rho, cert.rho_inverse);
}

SearchResult search_conjugator(const Endomorphism& sigma1, const Endomorphism& sigma2,
                               const SearchOptions& options) {
  SearchResult result;
  const int rank = sigma1.rank();
  if (sigma2.rank() != rank) {
    throw Error(ErrorCode::invalid_argument, "rank mismatch");
  }
  if (rank == 3) {
    const CubicPoly p1 = char_poly(abelianization(sigma1));
    const CubicPoly p2 = char_poly(abelianization(sigma2));
    if (!(p1 == p2)) {
      result.reason = "characteristic polynomials differ: " + p1.str() + " vs " + p2.str();
      return result;
    }
  }

  // Inner words, shortlex.
  std::vector<Word> layer{Word()};
  for (int len = 0; len <= options.inner_depth; ++len) {
    if (len > 0) layer = words_of_length(layer, rank);
    result.states += layer.size();
    const auto hit = screen(
        layer.size(), [&](std::size_t i) { return check_inner(sigma1, sigma2, layer[i]); },
        options.parallel);
    if (hit) {
      const Word& w = layer[*hit];
      result.certificate = ConjugacyCertificate{ConjugacyKind::inner, inner_automorphism(w, rank),
                                                inner_automorphism(w.inverse(), rank), w};
      result.depth = len;
      result.reason = "inner conjugate by w = " + w.str();
      return result;
    }
  }

  // Outer: breadth-first over Nielsen products rho = N1 ∘ ... ∘ Nd.
  const auto& moves = nielsen_moves(rank);
  std::vector<std::vector<SearchState>> layers;
  layers.push_back({SearchState{Endomorphism::identity(rank), 0, 0}});
  std::set<Endomorphism> seen{layers[0][0].rho};

  for (int depth = 1; depth <= options.max_depth; ++depth) {
    std::vector<SearchState> next;
    const auto& prev = layers.back();
    for (std::size_t p = 0; p < prev.size() && seen.size() < options.state_budget; ++p) {
      for (std::size_t m = 0; m < moves.size(); ++m) {
        Endomorphism rho = compose(prev[p].rho, moves[m].map);
        if (seen.insert(rho).second) next.push_back({std::move(rho), p, m});
      }
    }
    std::sort(next.begin(), next.end(),
              [](const SearchState& a, const SearchState& b) { return a.rho < b.rho; });
    result.states += next.size();
    result.depth = depth;

    const auto hit = screen(
        next.size(),
        [&](std::size_t i) {
          const Endomorphism& rho = next[i].rho;
          return compose(sigma2, rho) == compose(rho, sigma1);
        },
        options.parallel);
    if (hit) {
      // rho^-1 = Nd^-1 ∘ ... ∘ N1^-1, rebuilt along the parent chain
      Endomorphism rho_inv = moves[next[*hit].move].inverse;
      std::size_t parent = next[*hit].parent;
      for (std::size_t d = layers.size() - 1; d > 0; --d) {
        const SearchState& s = layers[d][parent];
        rho_inv = compose(rho_inv, moves[s.move].inverse);
        parent = s.parent;
      }
      ConjugacyCertificate cert{ConjugacyKind::outer, next[*hit].rho, rho_inv, Word()};
      if (!check_conjugation(sigma1, sigma2, cert.rho, cert.rho_inverse)) {
        throw Error(ErrorCode::bad_inverse, "internal: certificate failed verification");
      }
      result.certificate = std::move(cert);
      result.reason = "outer conjugate at Nielsen depth " + std::to_string(depth);
      return result;
    }
    if (seen.size() >= options.state_budget) {
      result.reason = "search budget exhausted at depth " + std::to_string(depth) +
                      " (not a proof of non-conjugacy)";
      return result;
    }
    layers.push_back(std::move(next));
  }
  result.reason = "no conjugator up to Nielsen depth " + std::to_string(options.max_depth) +
                  " (not a proof of non-conjugacy)";
  return result;
}

bool gl3z_conjugate(const IntMatrix3& m1, const IntMatrix3& m2, const IntMatrix3& p) {
  const std::int64_t det = p.determinant();
  if (det != 1 && det != -1) return false;
  return p.adjugate() * m2 * p == m1 * det;
}

FieldElement relative_scale_exact(const Endomorphism& rho, const PisotData& pd) {
  const FieldVector3& l = pd.left_eigenvector;
  const FieldVector3 v = row_times(l, abelianization(rho));
  const FieldElement s = v[0] / l[0];
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(v[i] == s * l[i])) {
      throw Error(ErrorCode::not_eigen, "ab(" + rho.str() + ") does not preserve the tile-length line");
    }
  }
  return s;
}

double relative_scale(const Endomorphism& rho, const PisotData& pd) {
  return relative_scale_exact(rho, pd).embed(pd.lambda);
}

std::optional<FieldElement> tile_length_scale(const PisotData& sigma, const PisotData& sigma_prime,
                                              const Endomorphism& rho) {
  if (!(sigma.charpoly == sigma_prime.charpoly)) return std::nullopt;
  const FieldVector3& l = sigma.left_eigenvector;
  const FieldVector3 v = row_times(sigma_prime.left_eigenvector, abelianization(rho));
  const FieldElement s = v[0] / l[0];
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(v[i] == s * l[i])) return std::nullopt;
  }
  return s;
}

bool LiReport::consistent() const {
  return std::all_of(equal.begin(), equal.end(), [](bool b) { return b; });
}

LiReport li_subword_equivalence(const Substitution& sigma1, const Substitution& sigma2,
                                std::size_t k_max, std::size_t prefix_length) {
  const auto prefix = [&](const Substitution& s) {
    std::string str = fixed_point_prefix(s, find_periodic_seed(s), prefix_length).str();
    str.resize(prefix_length);
    return str;
  };
  const std::string w1 = prefix(sigma1);
  const std::string w2 = prefix(sigma2);
  LiReport report;
  report.prefix_length = prefix_length;
  for (std::size_t k = 1; k <= k_max; ++k) report.equal.push_back(factors(w1, k) == factors(w2, k));
  return report;
}

RewriteRule::RewriteRule(Word p, Word r) : pattern(std::move(p)), replacement(std::move(r)) {
  if (pattern.empty() || !pattern.is_positive() || !replacement.is_positive()) {
    throw Error(ErrorCode::invalid_argument, "rewrite rule needs a nonempty positive pattern");
  }
}

RewriteRule RewriteRule::parse(std::string_view text) {
  const auto arrow = text.find("->");
  if (arrow == std::string_view::npos) {
    throw Error(ErrorCode::parse_error, "rewrite rule must look like 'ab->ba'");
  }
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  return RewriteRule(Word::parse(trim(text.substr(0, arrow))),
                     Word::parse(trim(text.substr(arrow + 2))));
}

std::string RewriteRule::str() const { return pattern.str() + "->" + replacement.str(); }

Word apply_rewrite(const Word& w, const RewriteRule& rule) {
  if (!w.is_positive()) {
    throw Error(ErrorCode::negative_letter, "rewrite input must be positive");
  }
  const auto letters = w.letters();
  const auto pat = rule.pattern.letters();
  Word out;
  std::size_t i = 0;
  while (i < letters.size()) {
    if (i + pat.size() <= letters.size() &&
        std::equal(pat.begin(), pat.end(), letters.begin() + static_cast<std::ptrdiff_t>(i))) {
      out *= rule.replacement;
      i += pat.size();
    } else {
      out.push(letters[i]);
      ++i;
    }
  }
  return out;
}

bool MldReport::passed() const {
  return !levels.empty() && std::all_of(levels.begin(), levels.end(), [](const MldLevel& l) {
    return l.subwords_ok && l.length_ok;
  });
}

MldReport mld_rewrite_verify(const Substitution& sigma, const Substitution& sigma_prime,
                             const RewriteRule& rule, std::size_t k_max, int levels) {
  const PisotData pd = pisot_check(abelianization(sigma.map()));
  const PisotData pd_prime = pisot_check(abelianization(sigma_prime.map()));
  const bool exact = pd.charpoly == pd_prime.charpoly;

  const Seed seed = find_periodic_seed(sigma);
  const std::string lang_prime =
      fixed_point_prefix(sigma_prime, find_periodic_seed(sigma_prime), 10'000).str();
  std::vector<std::set<std::string>> allowed;
  for (std::size_t k = 1; k <= k_max; ++k) allowed.push_back(factors(lang_prime, k));

  const auto numeric_length = [](const Word& w, const PisotData& p) {
    const IntVector3 c = abelianize(w);
    const auto l = embed(p.left_eigenvector, p.lambda);
    return l[0] * static_cast<double>(c[0]) + l[1] * static_cast<double>(c[1]) +
           l[2] * static_cast<double>(c[2]);
  };

  MldReport report;
  std::optional<FieldElement> first_scale;
  double first_ratio = 0.0;
  for (int n = 1; n <= levels; ++n) {
    const Word w = level_word(sigma, seed.letter, n);
    const Word r = apply_rewrite(w, rule);
    MldLevel lv;
    lv.level = n;
    lv.word_length = w.size();
    lv.subwords_ok = true;
    const std::string rs = r.str();
    for (std::size_t k = 1; k <= k_max && lv.subwords_ok; ++k) {
      for (const auto& f : factors(rs, k)) {
        if (!allowed[k - 1].count(f)) {
          lv.subwords_ok = false;
          break;
        }
      }
    }
    if (exact) {
      const FieldElement s = total_length(r, pd_prime.left_eigenvector) /
                             total_length(w, pd.left_eigenvector);
      if (!first_scale) first_scale = s;
      lv.length_ok = s == *first_scale;
      lv.length_ratio = s.embed(pd.lambda);
    } else {
      lv.length_ratio = numeric_length(r, pd_prime) / numeric_length(w, pd);
      if (n == 1) first_ratio = lv.length_ratio;
      lv.length_ok = std::fabs(lv.length_ratio - first_ratio) <= 1e-9 * std::fabs(first_ratio);
    }
    report.levels.push_back(lv);
  }
  report.scale = first_scale ? first_scale->str() : std::to_string(first_ratio);
  return report;
}

}  // namespace pisot
