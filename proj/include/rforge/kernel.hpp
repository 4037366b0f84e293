#pragma once

#include <span>
#include <string>
#include <vector>

#include "rforge/presentation.hpp"
#include "rforge/word.hpp"

namespace rforge {

// One signed occurrence of an indexed generator a_i.
struct IndexedLetter {
  int index = 0;
  int sign = 1;

  IndexedLetter inverse() const { return IndexedLetter{index, -sign}; }

  friend bool operator==(const IndexedLetter&, const IndexedLetter&) = default;
};

// A freely reduced word over the indexed generators {a_i}.
class IndexedWord {
 public:
  IndexedWord() = default;

  static IndexedWord from_letters(std::vector<IndexedLetter> raw);

  const std::vector<IndexedLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  int min_index() const;  // pre: nonempty
  int max_index() const;  // pre: nonempty

  friend bool operator==(const IndexedWord&, const IndexedWord&) = default;

 private:
  friend IndexedWord reduce_indexed(std::span<const IndexedLetter> raw);
  std::vector<IndexedLetter> letters_;
};

IndexedWord reduce_indexed(std::span<const IndexedLetter> raw);
IndexedWord invert(const IndexedWord& w);

// Every index incremented by d.
IndexedWord shift(const IndexedWord& w, int d);

// Shift so that the minimal occurring index becomes 0 (identity on the empty word).
IndexedWord normalize_base(const IndexedWord& w);

// "a_1^-1 a_0^2 a_1 a_0^-3"; negative indices print as e.g. "a_-1".
std::string to_string(const IndexedWord& w, const std::string& stem = "a");

// A Z-indexed presentation: each schema stands for the family of all its
// integer shifts. Schemas are stored base-normalized (minimal index 0).
// `window` is a truncation knob for finite instantiation and is not part of
// the value identity.
struct IndexedPresentation {
  std::vector<IndexedWord> schemas;
  int window = 8;

  friend bool operator==(const IndexedPresentation& a, const IndexedPresentation& b) {
    return a.schemas == b.schemas;
  }
};

// Rewrites a zero-axis-sum word over {fiber, axis} into indexed form: scanning
// left to right, an axis letter with sign e lowers the height by e, and a
// fiber letter at height h becomes the indexed letter with index h. This is
// the standard rewriting of the normal closure of the fiber generator along
// the transversal of axis powers, with fiber_h = axis^-h fiber axis^h.
// Throws NonzeroExponentSumError / UnknownGeneratorError.
IndexedWord height_rewrite(const Word& w, const Generator& fiber, const Generator& axis);

// Substitutes axis^-i fiber^s axis^i for each indexed letter and reduces;
// inverse of height_rewrite.
Word unrewrite(const IndexedWord& w, const Generator& fiber, const Generator& axis);

// Presentation of the kernel of the map onto Z sending axis to 1 and fiber
// to 0: one base-normalized schema per relator, the kernel relators being all
// integer shifts. Requires every relator to have zero axis exponent sum.
IndexedPresentation z_kernel(const Presentation& p, const Generator& fiber, const Generator& axis);

// Convenience for two-generator presentations: fiber = generators[0],
// axis = generators[1].
IndexedPresentation z_kernel(const Presentation& p);

struct SplitOutcome {
  bool ok = false;
  std::vector<IndexedPresentation> components;
  IndexedWord offending_schema;  // set when !ok
};

// Groups the indexed generators modulo n. Succeeds iff every schema uses
// indices from a single residue class mod n; then each of the n components
// carries every schema with indices divided by n.
SplitOutcome split_mod(const IndexedPresentation& ip, int n);

// Generator name for index i over the given stem; negative indices use an
// 'm' marker ("a_m2") so names stay within the identifier alphabet.
std::string indexed_generator_name(const std::string& stem, int index);

// Finite window: generators for indices -window..window and every shift of
// every schema whose support fits. Throws WindowTooSmallError when some
// schema admits no shift inside the window.
Presentation instantiate(const IndexedPresentation& ip, int window, const std::string& stem = "a");

// Single finite instance of one schema: generators are exactly the indices
// occurring in it (nonnegative after normalization), one relator.
Presentation presentation_of_schema_instance(const IndexedWord& schema, const std::string& stem = "a");

}  // namespace rforge
