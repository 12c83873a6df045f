#pragma once

#include <array>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "pisot/cps.hpp"
#include "pisot/word.hpp"

namespace pisot {

/// Letter g and the smallest power k with sigma^k(g) starting with g.
struct Seed {
  int letter = 0;
  int power = 1;
  friend bool operator==(const Seed&, const Seed&) = default;
};

/// Throws NoSeed when no letter qualifies within max_power.
Seed find_periodic_seed(const Substitution& sigma, int max_power = 6);

/// sigma^n applied to a single letter.
Word level_word(const Substitution& sigma, int letter, int n);

/// Iterates sigma^k from the seed letter until the word has at least
/// min_length letters. Successive iterates are checked to be prefixes.
Word fixed_point_prefix(const Substitution& sigma, const Seed& seed, std::size_t min_length);

struct Tile {
  int letter = 0;
  double left = 0.0;
  double length = 0.0;
};

/// Geometric realization of a positive word; vertices[k] is the lattice
/// point of the left endpoint of tile k.
struct TilingPatch {
  std::vector<Tile> segments;
  std::vector<IntVector3> vertices;

  double total_length() const;
};

/// Throws NegativeLetter if w has an inverse letter.
TilingPatch realize(const Word& w, const Cps& cps);

/// Lines "letter left length".
void write_patch_text(std::ostream& os, const TilingPatch& patch);

/// All length-k factors of a positive word, rendered as strings.
std::set<std::string> subword_set(const Word& w, std::size_t k);

/// Letter counts divided by the word length.
std::array<double, 3> letter_frequencies(const Word& w);

}  // namespace pisot
