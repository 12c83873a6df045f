#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pisot/matrix_analysis.hpp"
#include "pisot/number_field.hpp"
#include "pisot/pisot_data.hpp"
#include "pisot/word.hpp"

namespace pisot {

enum class ConjugacyKind { inner, outer };

/// Witness that two substitutions are related.
///  inner: sigma1(g) = w^-1 sigma2(g) w, rho = (g -> w^-1 g w).
///  outer: sigma1 = rho^-1 ∘ sigma2 ∘ rho.
struct ConjugacyCertificate {
  ConjugacyKind kind = ConjugacyKind::outer;
  Endomorphism rho;
  Endomorphism rho_inverse;
  Word inner_word;
};

/// apply(rho_inv, sigma2(rho(g))) == sigma1(g) for every generator.
/// Throws BadInverse if rho ∘ rho_inv is not the identity.
bool check_conjugation(const Endomorphism& sigma1, const Endomorphism& sigma2,
                       const Endomorphism& rho, const Endomorphism& rho_inv);

/// w^-1 sigma2(g) w == sigma1(g) for every generator.
bool check_inner(const Endomorphism& sigma1, const Endomorphism& sigma2, const Word& w);

/// g -> w^-1 g w
Endomorphism inner_automorphism(const Word& w, int rank = kDefaultRank);

/// Re-checks a certificate against the relation its kind claims.
bool verify_certificate(const Endomorphism& sigma1, const Endomorphism& sigma2,
                        const ConjugacyCertificate& cert);

struct SearchOptions {
  int max_depth = 8;
  int inner_depth = 6;
  std::size_t state_budget = 2'000'000;
  bool parallel = true;
};

struct SearchResult {
  std::optional<ConjugacyCertificate> certificate;
  std::string reason;
  int depth = 0;
  std::size_t states = 0;

  bool found() const { return certificate.has_value(); }
};

/// Inner words are tried first in shortlex order, then breadth-first layers
/// of Nielsen products. Within the first successful layer the smallest image
/// tuple wins. Unequal characteristic polynomials are rejected immediately.
SearchResult search_conjugator(const Endomorphism& sigma1, const Endomorphism& sigma2,
                               const SearchOptions& options = {});

/// |det P| = 1 and adj(P) M2 P = det(P) M1.
bool gl3z_conjugate(const IntMatrix3& m1, const IntMatrix3& m2, const IntMatrix3& p);

/// s with l * ab(rho) = s * l exactly; throws NotEigen otherwise.
FieldElement relative_scale_exact(const Endomorphism& rho, const PisotData& pd);
double relative_scale(const Endomorphism& rho, const PisotData& pd);

/// Cross-matrix fallback: s with l' * ab(rho) = s * l, where l and l' are the
/// tile lengths of sigma and sigma' (same characteristic polynomial).
std::optional<FieldElement> tile_length_scale(const PisotData& sigma, const PisotData& sigma_prime,
                                              const Endomorphism& rho);

struct LiReport {
  std::size_t prefix_length = 0;
  /// equal[k-1] is whether the length-k factor sets agree.
  std::vector<bool> equal;

  bool consistent() const;
};

/// Compares factor sets of long fixed-point prefixes. Agreement is only
/// consistent with local isomorphism, not a proof of it.
LiReport li_subword_equivalence(const Substitution& sigma1, const Substitution& sigma2,
                                std::size_t k_max = 10, std::size_t prefix_length = 10'000);

struct RewriteRule {
  Word pattern;
  Word replacement;

  /// Throws InvalidArgument for an empty or non-positive pattern.
  RewriteRule(Word pattern, Word replacement);
  static RewriteRule parse(std::string_view text);  // "ab->ba"
  std::string str() const;
};

/// Single left-to-right pass replacing non-overlapping pattern occurrences.
Word apply_rewrite(const Word& w, const RewriteRule& rule);

struct MldLevel {
  int level = 0;
  std::size_t word_length = 0;
  bool subwords_ok = false;
  bool length_ok = false;
  double length_ratio = 0.0;
};

struct MldReport {
  std::vector<MldLevel> levels;
  std::string scale;  // exact ratio when available

  bool passed() const;
};

MldReport mld_rewrite_verify(const Substitution& sigma, const Substitution& sigma_prime,
                             const RewriteRule& rule, std::size_t k_max = 8, int levels = 6);

}  // namespace pisot
