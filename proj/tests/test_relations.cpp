#include <doctest.h>

#include <chrono>

#include "fixtures.hpp"
#include "pisot/error.hpp"
#include "pisot/relations.hpp"
#include "pisot/tiling.hpp"

using namespace pisot;
using namespace fx;
using doctest::Approx;

namespace {
PisotData pd_of(const Substitution& s) { return pisot_check(abelianization(s.map())); }

Endomorphism inner_conjugate(const Endomorphism& sigma, const Word& w) {
  return compose(inner_automorphism(w), sigma);
}
}  // namespace

TEST_SUITE("relations") {

TEST_CASE("check_conjugation on the known pairs") {
  CHECK(check_conjugation(s1.map(), s1p.map(), rho1, rho1_inv));
  CHECK(check_conjugation(s2.map(), s2p.map(), rho2, rho2_inv));
  CHECK(check_conjugation(sD.map(), sA.map(), rho3, rho3_inv));
  CHECK(check_conjugation(sA.map(), sB.map(), u1_inv, u1));
  CHECK(check_conjugation(sC.map(), sB.map(), u1, u1_inv));
  CHECK_FALSE(check_conjugation(s1.map(), s2.map(), rho1, rho1_inv));
  CHECK_FALSE(check_conjugation(s1p.map(), s1.map(), rho1, rho1_inv));
  CHECK_THROWS_AS(check_conjugation(s1.map(), s1p.map(), rho1, rho2_inv), Error);
}

TEST_CASE("check_inner") {
  CHECK(check_inner(s1.map(), s1.map(), Word()));
  const Endomorphism c_conj = inner_conjugate(s1.map(), W("c"));
  CHECK(c_conj == E({"bc", "c", "abc"}));
  CHECK(check_inner(c_conj, s1.map(), W("c")));
  CHECK_FALSE(check_inner(c_conj, s1.map(), W("b")));
  // exhaustive small words: s1 and s1' are not inner conjugate
  std::vector<Word> words{Word()};
  for (int len = 1; len <= 3; ++len) {
    std::vector<Word> next;
    for (const Word& w : words) {
      if (w.size() != static_cast<std::size_t>(len - 1)) continue;
      for (int g = 0; g < 3; ++g) {
        for (bool inv : {false, true}) {
          const Word x = w * Word::generator(g, inv);
          if (x.size() == static_cast<std::size_t>(len)) next.push_back(x);
        }
      }
    }
    words.insert(words.end(), next.begin(), next.end());
  }
  CHECK(words.size() == 1 + 6 + 30 + 150);
  for (const Word& w : words) CHECK_FALSE(check_inner(s1.map(), s1p.map(), w));
}

TEST_CASE("search_conjugator") {
  auto t0 = std::chrono::steady_clock::now();
  const SearchResult r1 = search_conjugator(s1.map(), s1p.map());
  REQUIRE(r1.found());
  CHECK(r1.certificate->kind == ConjugacyKind::outer);
  CHECK(r1.depth <= 6);
  CHECK(check_conjugation(s1.map(), s1p.map(), r1.certificate->rho, r1.certificate->rho_inverse));

  const SearchResult same = search_conjugator(s2.map(), s2.map());
  REQUIRE(same.found());
  CHECK(same.certificate->rho.is_identity());

  const SearchResult none = search_conjugator(s1.map(), s2.map());
  CHECK_FALSE(none.found());
  CHECK(none.reason.find("characteristic polynomials differ") != std::string::npos);
  CHECK(none.states == 0);

  const Endomorphism inner = inner_conjugate(s2.map(), W("ca"));
  const SearchResult ri = search_conjugator(inner, s2.map());
  REQUIRE(ri.found());
  CHECK(ri.certificate->kind == ConjugacyKind::inner);
  CHECK(verify_certificate(inner, s2.map(), *ri.certificate));
  CHECK(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(20));
}

TEST_CASE("search is deterministic and schedule independent") {
  SearchOptions serial;
  serial.parallel = false;
  const SearchResult a = search_conjugator(s2.map(), s2p.map());
  const SearchResult b = search_conjugator(s2.map(), s2p.map(), serial);
  REQUIRE(a.found());
  REQUIRE(b.found());
  CHECK(a.certificate->rho == b.certificate->rho);
  CHECK(a.depth == b.depth);
}

TEST_CASE("search gives up honestly") {
  SearchOptions shallow;
  shallow.max_depth = 0;
  shallow.inner_depth = 0;
  const SearchResult r = search_conjugator(s1.map(), s1p.map(), shallow);
  CHECK_FALSE(r.found());
  CHECK(r.reason.find("depth") != std::string::npos);
  SearchOptions tiny;
  tiny.state_budget = 5;
  tiny.inner_depth = 0;
  const SearchResult t = search_conjugator(sA.map(), sB.map(), tiny);
  CHECK_FALSE(t.found());
  CHECK(t.reason.find("budget") != std::string::npos);
}

TEST_CASE("gl3z_conjugate") {
  const IntMatrix3 m2 = abelianization(s2.map()), m2p = abelianization(s2p.map());
  const IntMatrix3 p = abelianization(rho2);
  CHECK(p == IntMatrix3::from_columns({IntVector3{1, 0, 0}, {-1, 1, 0}, {0, 0, 1}}));
  CHECK(gl3z_conjugate(m2, m2p, p));
  CHECK(gl3z_conjugate(m2, m2, IntMatrix3::identity()));
  const IntMatrix3 mA = abelianization(sA.map()), U = abelianization(u1);
  CHECK(gl3z_conjugate(mA, mA, U));
  CHECK(U.power(3) == mA);
  CHECK_FALSE(gl3z_conjugate(m2, m2, IntMatrix3::identity() * 2));
  CHECK_FALSE(gl3z_conjugate(m2, m2p, IntMatrix3::identity()));
}

TEST_CASE("relative scale") {
  CHECK(relative_scale(rho1, pd_of(s1)) == Approx(1.0));
  const PisotData pa = pd_of(sA);
  CHECK(relative_scale(u1, pa) == Approx(std::cbrt(pa.lambda)).epsilon(1e-12));
  CHECK(relative_scale(u1, pa) == Approx(1.3247179572447460).epsilon(1e-12));
  const FieldElement s = relative_scale_exact(u1, pa);
  CHECK(s * s * s == FieldElement::generator(pa.charpoly));
  CHECK_THROWS_AS(relative_scale(rho2, pd_of(s2)), Error);

  const PisotData p2 = pd_of(s2), p2p = pd_of(s2p);
  const auto scale = tile_length_scale(p2, p2p, rho2);
  REQUIRE(scale.has_value());
  CHECK(*scale == FieldElement(p2.charpoly, 1));
  CHECK_FALSE(tile_length_scale(p2, p2p, Endomorphism::identity()).has_value());
  CHECK_FALSE(tile_length_scale(pd_of(s1), p2p, rho2).has_value());
  const FieldVector3 l = tile_lengths(p2), lp = tile_lengths(p2p);
  CHECK((lp[1] - (l[0] + l[1])).is_zero());
}

TEST_CASE("LI controls") {
  CHECK(li_subword_equivalence(s1, s1, 10, 5000).consistent());
  const LiReport r = li_subword_equivalence(s1, s1p, 2, 10000);
  CHECK_FALSE(r.consistent());
  CHECK(r.equal[0]);
  CHECK_FALSE(r.equal[1]);
  const Substitution conj(inner_conjugate(s1.map(), W("c")));
  const LiReport inner = li_subword_equivalence(s1, conj, 10, 10000);
  CHECK(inner.equal.size() == 10);
  CHECK(inner.consistent());
}

TEST_CASE("inner conjugation preserves factor sets (property)") {
  std::mt19937 rng(71);
  std::uniform_int_distribution<std::size_t> pick(0, all_subs.size() - 1);
  int tested = 0;
  for (int trial = 0; trial < 60 && tested < 12; ++trial) {
    const Substitution& s = *all_subs[pick(rng)];
    const Word w = random_word(rng, 3);
    const Endomorphism conj = inner_conjugate(s.map(), w);
    if (!conj.is_substitution()) continue;  // w^-1 sigma(g) w must stay positive
    ++tested;
    CHECK(li_subword_equivalence(s, Substitution(conj), 8, 10000).consistent());
  }
  CHECK(tested >= 3);
}

TEST_CASE("apply_rewrite") {
  const RewriteRule swap = RewriteRule::parse("ab->ba");
  const RewriteRule drop = RewriteRule::parse("ab->b");
  CHECK(apply_rewrite(W("cabcbc"), swap).str() == "cbacbc");
  CHECK(apply_rewrite(W("cabca"), drop).str() == "cbca");
  CHECK(apply_rewrite(Word(), swap).empty());
  CHECK(apply_rewrite(W("aaa"), RewriteRule::parse("aa->b")).str() == "ba");
  CHECK(swap.str() == "ab->ba");
  CHECK_THROWS_AS(RewriteRule::parse("ab"), Error);
  CHECK_THROWS_AS(RewriteRule::parse("->b"), Error);
  CHECK_THROWS_AS(apply_rewrite(W("aB"), swap), Error);
}

TEST_CASE("rewrite locality (property)") {
  std::mt19937 rng(72);
  const RewriteRule swap = RewriteRule::parse("ab->ba");
  const Word base = fixed_point_prefix(s1, {2, 1}, 3000);
  const std::string text = base.str();
  std::uniform_int_distribution<std::size_t> cut(1, text.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = cut(rng);
    if (text.compare(k - 1, 2, "ab") == 0) continue;  // cut inside an occurrence
    const Word left = W(text.substr(0, k)), right = W(text.substr(k));
    CHECK(apply_rewrite(left * right, swap) == apply_rewrite(left, swap) * apply_rewrite(right, swap));
  }
}

TEST_CASE("mld_rewrite_verify") {
  const MldReport ex1 = mld_rewrite_verify(s1, s1p, RewriteRule::parse("ab->ba"), 8, 6);
  CHECK(ex1.passed());
  CHECK(ex1.levels.size() == 6);
  const MldReport ex2 = mld_rewrite_verify(s2, s2p, RewriteRule::parse("ab->b"), 8, 6);
  CHECK(ex2.passed());
  const MldReport id = mld_rewrite_verify(s2, s2, RewriteRule::parse("a->a"), 8, 4);
  CHECK(id.passed());
  const MldReport wrong = mld_rewrite_verify(s1, s1p, RewriteRule::parse("ab->b"), 8, 4);
  CHECK_FALSE(wrong.passed());
}

TEST_CASE("certificates re-verify and respect abelianization (property)") {
  struct Case {
    const Endomorphism* s1;
    const Endomorphism* s2;
    const Endomorphism* rho;
    const Endomorphism* inv;
  };
  const std::vector<Case> cases{{&s1.map(), &s1p.map(), &rho1, &rho1_inv},
                                {&s2.map(), &s2p.map(), &rho2, &rho2_inv},
                                {&sD.map(), &sA.map(), &rho3, &rho3_inv},
                                {&sA.map(), &sB.map(), &u1_inv, &u1},
                                {&sC.map(), &sB.map(), &u1, &u1_inv}};
  for (const auto& c : cases) {
    REQUIRE(check_conjugation(*c.s1, *c.s2, *c.rho, *c.inv));
    CHECK(gl3z_conjugate(abelianization(*c.s1), abelianization(*c.s2), abelianization(*c.rho)));
    const SearchResult r = search_conjugator(*c.s1, *c.s2);
    REQUIRE(r.found());
    CHECK(verify_certificate(*c.s1, *c.s2, *r.certificate));
  }
  // random conjugates of fixtures
  std::mt19937 rng(73);
  for (int trial = 0; trial < 6; ++trial) {
    const auto [rho, inv] = random_automorphism(rng, 2);
    const Endomorphism& base = all_subs[static_cast<std::size_t>(trial)]->map();
    const Endomorphism target = compose(rho, compose(base, inv));  // base = rho^-1 target rho
    CHECK(check_conjugation(base, target, rho, inv));
    const SearchResult r = search_conjugator(base, target);
    REQUIRE(r.found());
    CHECK(verify_certificate(base, target, *r.certificate));
  }
}

}  // TEST_SUITE
