#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rforge {

// A named free-group generator. Identity and ordering are by name.
struct Generator {
  std::string name;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

// One signed occurrence of a generator inside a word.
struct Letter {
  Generator gen;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return Letter{gen, -sign}; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Letter order used for canonical forms: generator name first, then '+' before '-'.
inline bool letter_less(const Letter& a, const Letter& b) {
  if (a.gen.name != b.gen.name) return a.gen.name < b.gen.name;
  return a.sign > b.sign;
}

// A freely reduced word over some generators; the empty word is the identity.
// Equality, hashing and ordering are over the flat reduced letter sequence.
class Word {
 public:
  Word() = default;

  static Word generator(std::string name) {
    Word w;
    w.letters_.push_back(Letter{Generator{std::move(name)}, +1});
    return w;
  }

  // Takes an arbitrary raw letter sequence and freely reduces it.
  static Word from_letters(std::vector<Letter> raw);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  friend Word reduce(std::span<const Letter> raw);
  std::vector<Letter> letters_;
};

// Lexicographic order on reduced letter sequences (letter_less per position,
// a proper prefix precedes any extension).
bool word_less(const Word& a, const Word& b);

// Free reduction of a raw letter sequence; idempotent on reduced input.
Word reduce(std::span<const Letter> raw);

Word invert(const Word& w);

// Reduced concatenation.
Word concat(const Word& a, const Word& b);
inline Word operator*(const Word& a, const Word& b) { return concat(a, b); }

// y^-1 x y, reduced.
Word conjugate(const Word& x, const Word& y);

// x^-1 y^-1 x y, reduced.
Word commutator(const Word& x, const Word& y);

// n-fold product (inverse for negative n), reduced.
Word power(const Word& w, int n);

// w == conjugate(core, conjugator) with core cyclically reduced.
struct CyclicReduction {
  Word core;
  Word conjugator;
};
CyclicReduction cyclically_reduce(const Word& w);

// Signed count of occurrences of g in w.
int exponent_sum(const Word& w, const Generator& g);

// Image of a word in the free abelianization. Keeps an entry for every
// generator that appears in the reduced word, even when its sum is zero;
// equality ignores zero entries.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::map<Generator, int> sums) : sums_(std::move(sums)) {}

  int get(const Generator& g) const;
  bool contains(const Generator& g) const { return sums_.count(g) != 0; }
  bool is_zero() const;
  const std::map<Generator, int>& entries() const { return sums_; }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b);

  // "{a: -1, b: 0}", generators in lexicographic name order.
  std::string str() const;

 private:
  std::map<Generator, int> sums_;
};

ExponentVector abelianize(const Word& w);

// Runs collapsed into powers, e.g. "b^-1 a^2 b"; the identity prints as "1".
std::string to_string(const Word& w);

}  // namespace rforge
