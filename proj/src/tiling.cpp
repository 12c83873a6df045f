#include "pisot/tiling.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "pisot/error.hpp"

namespace pisot {

Seed find_periodic_seed(const Substitution& sigma, int max_power) {
  std::vector<Word> current;
  for (int g = 0; g < sigma.rank(); ++g) current.push_back(Word::generator(g));
  for (int k = 1; k <= max_power; ++k) {
    for (int g = 0; g < sigma.rank(); ++g) {
      auto& w = current[static_cast<std::size_t>(g)];
      w = sigma.apply(w);
      if (w[0].gen == g) return {g, k};
    }
  }
  throw Error(ErrorCode::no_seed, "no letter is a prefix of its own image under " +
                                      sigma.str() + " up to power " + std::to_string(max_power));
}

Word level_word(const Substitution& sigma, int letter, int n) {
  Word w = Word::generator(letter);
  for (int i = 0; i < n; ++i) w = sigma.apply(w);
  return w;
}

Word fixed_point_prefix(const Substitution& sigma, const Seed& seed, std::size_t min_length) {
  Word w = Word::generator(seed.letter);
  while (w.size() < min_length) {
    Word next = w;
    for (int i = 0; i < seed.power; ++i) next = sigma.apply(next);
    if (next.size() <= w.size() ||
        !std::equal(w.begin(), w.end(), next.begin())) {
      throw Error(ErrorCode::no_seed, "iterates of the seed are not nested prefixes");
    }
    w = std::move(next);
  }
  return w;
}

double TilingPatch::total_length() const {
  if (segments.empty()) return 0.0;
  return segments.back().left + segments.back().length;
}

TilingPatch realize(const Word& w, const Cps& cps) {
  TilingPatch patch;
  patch.segments.reserve(w.size());
  patch.vertices.reserve(w.size());
  IntVector3 v{0, 0, 0};
  for (Letter l : w) {
    if (l.inverse) {
      throw Error(ErrorCode::negative_letter, "cannot realize inverse letter in " + w.str());
    }
    patch.vertices.push_back(v);
    patch.segments.push_back({l.gen, cps.project_phys(v), cps.pi1()[l.gen]});
    v[l.gen] += 1;
  }
  return patch;
}

void write_patch_text(std::ostream& os, const TilingPatch& patch) {
  char buf[96];
  for (const Tile& t : patch.segments) {
    std::snprintf(buf, sizeof buf, "%c %.12f %.12f\n", generator_name(t.letter), t.left, t.length);
    os << buf;
  }
}

std::set<std::string> subword_set(const Word& w, std::size_t k) {
  std::set<std::string> out;
  if (k == 0 || k > w.size()) return out;
  const std::string s = w.str();
  for (std::size_t i = 0; i + k <= s.size(); ++i) out.insert(s.substr(i, k));
  return out;
}

std::array<double, 3> letter_frequencies(const Word& w) {
  std::array<double, 3> f{};
  if (w.empty()) return f;
  for (Letter l : w) f[l.gen] += 1.0;
  for (auto& x : f) x /= static_cast<double>(w.size());
  return f;
}

}  // namespace pisot
