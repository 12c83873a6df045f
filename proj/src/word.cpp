#include "pisot/word.hpp"

#include <algorithm>
#include <cctype>

#include "pisot/error.hpp"

namespace pisot {

char letter_char(Letter l) {
  const char base = l.inverse ? 'A' : 'a';
  return static_cast<char>(base + l.gen);
}

char generator_name(int gen) { return static_cast<char>('a' + gen); }

Word::Word(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) push(l);
}

Word Word::generator(int gen, bool inverse) {
  if (gen < 0 || gen >= kMaxRank) {
    throw Error(ErrorCode::invalid_argument, "generator index out of range");
  }
  Word w;
  w.letters_.push_back({static_cast<std::uint8_t>(gen), inverse});
  return w;
}

Word Word::parse(std::string_view text) {
  Word w;
  if (text == "1") return w;
  for (char ch : text) {
    if (ch >= 'a' && ch <= 'z') {
      w.push({static_cast<std::uint8_t>(ch - 'a'), false});
    } else if (ch >= 'A' && ch <= 'Z') {
      w.push({static_cast<std::uint8_t>(ch - 'A'), true});
    } else {
      throw Error(ErrorCode::parse_error,
                  "unexpected character '" + std::string(1, ch) + "' in word");
    }
  }
  return w;
}

void Word::push(Letter l) {
  if (!letters_.empty() && letters_.back() == l.inverted()) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

bool Word::is_positive() const {
  return std::none_of(letters_.begin(), letters_.end(),
                      [](Letter l) { return l.inverse; });
}

int Word::max_generator() const {
  int m = -1;
  for (Letter l : letters_) m = std::max(m, static_cast<int>(l.gen));
  return m;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back(it->inverted());
  }
  return w;
}

Word Word::reversed() const {
  Word w;
  w.letters_.assign(letters_.rbegin(), letters_.rend());
  return w;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(letter_char(l));
  return s;
}

Word& Word::operator*=(const Word& rhs) {
  letters_.reserve(letters_.size() + rhs.size());
  for (Letter l : rhs.letters_) push(l);
  return *this;
}

Word reduce(std::span<const Letter> seq) { return Word(seq); }

std::vector<std::int64_t> abelianize_word(const Word& w, int rank) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(rank), 0);
  for (Letter l : w) {
    if (l.gen >= rank) {
      throw Error(ErrorCode::invalid_argument, "letter outside the given rank");
    }
    v[l.gen] += l.sign();
  }
  return v;
}

Endomorphism::Endomorphism(std::vector<Word> images) : images_(std::move(images)) {
  if (images_.empty() || images_.size() > static_cast<std::size_t>(kMaxRank)) {
    throw Error(ErrorCode::invalid_argument, "rank must be between 1 and 26");
  }
  for (const Word& w : images_) {
    if (w.max_generator() >= rank()) {
      throw Error(ErrorCode::invalid_argument,
                  "image " + w.str() + " uses a letter outside the rank");
    }
  }
}

Endomorphism Endomorphism::identity(int rank) {
  std::vector<Word> images;
  for (int g = 0; g < rank; ++g) images.push_back(Word::generator(g));
  return Endomorphism(std::move(images));
}

Endomorphism Endomorphism::parse(std::initializer_list<std::string_view> images) {
  std::vector<Word> words;
  for (auto s : images) words.push_back(Word::parse(s));
  return Endomorphism(std::move(words));
}

Word Endomorphism::apply(const Word& w) const {
  Word out;
  for (Letter l : w) {
    if (l.gen >= rank()) {
      throw Error(ErrorCode::invalid_argument, "letter outside the rank");
    }
    const Word& img = images_[l.gen];
    if (l.inverse) {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        out.push(it->inverted());
      }
    } else {
      for (Letter m : img) out.push(m);
    }
  }
  return out;
}

bool Endomorphism::is_identity() const {
  for (int g = 0; g < rank(); ++g) {
    const Word& w = images_[static_cast<std::size_t>(g)];
    if (w.size() != 1 || w[0] != Letter{static_cast<std::uint8_t>(g), false}) {
      return false;
    }
  }
  return true;
}

bool Endomorphism::is_substitution() const {
  return std::all_of(images_.begin(), images_.end(), [](const Word& w) {
    return !w.empty() && w.is_positive();
  });
}

std::size_t Endomorphism::total_length() const {
  std::size_t n = 0;
  for (const Word& w : images_) n += w.size();
  return n;
}

std::string Endomorphism::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ',';
    s += images_[i].str();
  }
  return s + "]";
}

Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner) {
  if (outer.rank() != inner.rank()) {
    throw Error(ErrorCode::invalid_argument, "rank mismatch in compose");
  }
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(inner.rank()));
  for (const Word& w : inner.images()) images.push_back(outer.apply(w));
  return Endomorphism(std::move(images));
}

Endomorphism reverse_endomorphism(const Endomorphism& phi) {
  std::vector<Word> images;
  for (const Word& w : phi.images()) images.push_back(w.reversed());
  return Endomorphism(std::move(images));
}

std::vector<std::vector<std::int64_t>> abelianization_matrix(const Endomorphism& phi) {
  const auto n = static_cast<std::size_t>(phi.rank());
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (Letter l : phi.images()[j]) m[l.gen][j] += l.sign();
  }
  return m;
}

Substitution::Substitution(Endomorphism map) : map_(std::move(map)) {
  if (!map_.is_substitution()) {
    throw Error(ErrorCode::not_substitution,
                map_.str() + " has an empty or non-positive image");
  }
}

Substitution Substitution::parse(std::initializer_list<std::string_view> images) {
  return Substitution(Endomorphism::parse(images));
}

}  // namespace pisot
