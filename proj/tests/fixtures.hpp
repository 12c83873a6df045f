#pragma once

#include <random>
#include <string>

#include "pisot/nielsen.hpp"
#include "pisot/word.hpp"

namespace fx {

using pisot::Endomorphism;
using pisot::Substitution;
using pisot::Word;

inline Endomorphism E(std::initializer_list<std::string_view> images) {
  return Endomorphism::parse(images);
}
inline Substitution S(std::initializer_list<std::string_view> images) {
  return Substitution::parse(images);
}
inline Word W(std::string_view text) { return Word::parse(text); }

inline const Substitution s1 = S({"cb", "c", "cab"});
inline const Substitution s1p = S({"bc", "c", "cba"});
inline const Substitution s2 = S({"c", "a", "cab"});
inline const Substitution s2p = S({"c", "ca", "cb"});
inline const Substitution sA = S({"ca", "ab", "cab"});
inline const Substitution sB = S({"ac", "ab", "abc"});
inline const Substitution sC = S({"ca", "ba", "bac"});
inline const Substitution sD = S({"ac", "ab", "bac"});

inline const Endomorphism rho1 = E({"baB", "b", "c"});
inline const Endomorphism rho1_inv = E({"Bab", "b", "c"});
inline const Endomorphism rho2 = E({"a", "Ab", "c"});
inline const Endomorphism rho2_inv = E({"a", "ab", "c"});
inline const Endomorphism rho3 = E({"a", "b", "Aca"});
inline const Endomorphism rho3_inv = E({"a", "b", "acA"});
inline const Endomorphism u1 = E({"c", "a", "ab"});
inline const Endomorphism u1_inv = E({"b", "Bc", "a"});
inline const Endomorphism u2 = E({"c", "a", "ba"});

inline const std::array<const Substitution*, 8> all_subs{&s1, &s1p, &s2, &s2p, &sA, &sB, &sC, &sD};

/// Uniform random reduced word over a, b, c and their inverses.
inline Word random_word(std::mt19937& rng, std::size_t max_len, bool positive = false) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, 2);
  std::bernoulli_distribution inv(positive ? 0.0 : 0.5);
  std::vector<pisot::Letter> letters;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    letters.push_back({static_cast<std::uint8_t>(gen(rng)), inv(rng)});
  }
  return Word(letters);
}

inline Endomorphism random_endomorphism(std::mt19937& rng, std::size_t max_len) {
  return Endomorphism(
      {random_word(rng, max_len), random_word(rng, max_len), random_word(rng, max_len)});
}

/// Random product of Nielsen moves, returned with its inverse.
inline std::pair<Endomorphism, Endomorphism> random_automorphism(std::mt19937& rng, int moves) {
  const auto& gens = pisot::nielsen_moves();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  Endomorphism phi = Endomorphism::identity(), inv = Endomorphism::identity();
  for (int i = 0; i < moves; ++i) {
    const auto& m = gens[pick(rng)];
    phi = pisot::compose(phi, m.map);
    inv = pisot::compose(m.inverse, inv);
  }
  return {phi, inv};
}

}  // namespace fx
