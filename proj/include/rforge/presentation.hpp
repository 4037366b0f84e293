#pragma once

#include <map>
#include <string>
#include <vector>

#include "rforge/word.hpp"

namespace rforge {

// A finite presentation: every relator means "word = 1".
struct Presentation {
  std::vector<Generator> generators;
  std::vector<Word> relators;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Validates the invariants (no duplicate generators, relator letters all
// listed) and returns the presentation.
Presentation make_presentation(std::vector<Generator> generators, std::vector<Word> relators);

// "<a, b | b^-1 a^-1 b a ...>", parseable by the DSL.
std::string to_string(const Presentation& p);

// true iff [r, w] is nontrivial in the free group.
bool check_noncommuting(const Word& r, const Word& w);

// The one-relator family member with relation (r^l)^(r^w) = r^k, presented
// on the generators occurring in r and w (sorted by name). Throws
// ZeroExponentError / CommutingPairError on bad parameters.
Presentation make_G(const Word& r, const Word& w, int l, int k);

struct Homomorphism {
  Presentation source;
  Presentation target;
  std::map<Generator, Word> images;

  friend bool operator==(const Homomorphism&, const Homomorphism&) = default;
};

// Substitutes images for generators and reduces; no validation.
Word substitute(const Word& w, const std::map<Generator, Word>& images);

// Generator-image substitution; throws UnknownGeneratorError when w uses a
// generator without an image.
Word apply_hom(const Homomorphism& h, const Word& w);

// true iff h2 undoes h1 on every source generator and vice versa. Throws
// SignatureMismatchError unless h1.target == h2.source and h2.target == h1.source.
bool verify_hom_pair_inverse(const Homomorphism& h1, const Homomorphism& h2);

// Canonical representative of {rotations of the cyclic core} united with
// {rotations of its inverse}: the lexicographically least under letter_less.
Word canonical_cyclic_form(const Word& w);

// true iff u and v agree as cyclic words up to rotation and inversion.
bool cyclic_equivalent(const Word& u, const Word& v);

// Sufficient check that h maps relators to consequences: every source relator
// must map to the identity or to a cyclic equivalent of some target relator.
// A false result means "not verified", never "not a homomorphism".
bool hom_respects_relators(const Homomorphism& h);

}  // namespace rforge
