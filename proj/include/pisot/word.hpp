#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pisot {

inline constexpr int kDefaultRank = 3;
inline constexpr int kMaxRank = 26;

/// A generator of the free group together with an exponent of +1 or -1.
struct Letter {
  std::uint8_t gen = 0;
  bool inverse = false;

  constexpr Letter inverted() const { return {gen, !inverse}; }
  constexpr int sign() const { return inverse ? -1 : 1; }

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

/// Lowercase for the generator, uppercase for its inverse.
char letter_char(Letter l);
char generator_name(int gen);

/// Freely reduced element of a free group. Reduction happens at construction,
/// so two words are equal in the group iff they compare equal.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Letter> letters);
  Word(std::initializer_list<Letter> letters)
      : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

  static Word generator(int gen, bool inverse = false);

  /// Exchange format: "baB" is b a b^-1, "1" (or "") is the identity.
  static Word parse(std::string_view text);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  bool is_positive() const;
  int max_generator() const;

  Word inverse() const;
  Word reversed() const;
  std::string str() const;

  /// Concatenate and freely reduce.
  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  /// Append a single letter, cancelling against the tail if possible.
  void push(Letter l);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence.
Word reduce(std::span<const Letter> seq);

/// Signed generator counts; the result has `rank` entries.
std::vector<std::int64_t> abelianize_word(const Word& w, int rank = kDefaultRank);

/// Homomorphism of the free group of the given rank, stored as the list of
/// images of the generators.
class Endomorphism {
 public:
  explicit Endomorphism(std::vector<Word> images);

  static Endomorphism identity(int rank = kDefaultRank);

  /// Images in the exchange format, e.g. {"cb", "c", "cab"}.
  static Endomorphism parse(std::initializer_list<std::string_view> images);

  int rank() const { return static_cast<int>(images_.size()); }
  const Word& image(int gen) const { return images_[static_cast<std::size_t>(gen)]; }
  const std::vector<Word>& images() const { return images_; }

  Word apply(const Word& w) const;

  bool is_identity() const;
  /// Every image nonempty and positive.
  bool is_substitution() const;
  std::size_t total_length() const;

  /// "[cb,c,cab]"
  std::string str() const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;
  friend auto operator<=>(const Endomorphism&, const Endomorphism&) = default;

 private:
  std::vector<Word> images_;
};

/// (outer ∘ inner)(g) = outer(inner(g)).
Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner);

/// Each image read backwards, signs unchanged.
Endomorphism reverse_endomorphism(const Endomorphism& phi);

/// Square matrix of signed letter counts; column j counts the image of j.
std::vector<std::vector<std::int64_t>> abelianization_matrix(const Endomorphism& phi);

/// An endomorphism with nonempty positive images.
class Substitution {
 public:
  explicit Substitution(Endomorphism map);
  static Substitution parse(std::initializer_list<std::string_view> images);

  const Endomorphism& map() const { return map_; }
  int rank() const { return map_.rank(); }
  const Word& image(int gen) const { return map_.image(gen); }
  Word apply(const Word& w) const { return map_.apply(w); }
  std::string str() const { return map_.str(); }

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  Endomorphism map_;
};

}  // namespace pisot
