#include "rforge/presentation.hpp"

#include <algorithm>
#include <set>

#include "rforge/errors.hpp"

namespace rforge {

Presentation make_presentation(std::vector<Generator> generators, std::vector<Word> relators) {
  std::set<Generator> seen;
  for (const Generator& g : generators) {
    if (!seen.insert(g).second) {
      throw InvalidPresentationError("duplicate generator '" + g.name + "'");
    }
  }
  for (const Word& r : relators) {
    for (const Letter& l : r.letters()) {
      if (seen.count(l.gen) == 0) {
        throw UnknownGeneratorError("relator uses undeclared generator '" + l.gen.name + "'");
      }
    }
  }
  return Presentation{std::move(generators), std::move(relators)};
}

std::string to_string(const Presentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ", ";
    out += p.generators[i].name;
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i) out += ", ";
    out += to_string(p.relators[i]);
  }
  out += ">";
  return out;
}

bool check_noncommuting(const Word& r, const Word& w) {
  return !commutator(r, w).empty();
}

Presentation make_G(const Word& r, const Word& w, int l, int k) {
  if (l == 0 || k == 0) throw ZeroExponentError("make_G requires l != 0 and k != 0");
  if (!check_noncommuting(r, w)) {
    throw CommutingPairError("make_G requires r and w to be noncommuting");
  }
  Word c = conjugate(r, w);
  Word relator = invert(c) * power(r, l) * c * power(r, -k);
  std::set<Generator> gens;
  for (const Letter& x : r.letters()) gens.insert(x.gen);
  for (const Letter& x : w.letters()) gens.insert(x.gen);
  return Presentation{std::vector<Generator>(gens.begin(), gens.end()), {relator}};
}

Word substitute(const Word& w, const std::map<Generator, Word>& images) {
  std::vector<Letter> raw;
  for (const Letter& l : w.letters()) {
    auto it = images.find(l.gen);
    if (it == images.end()) {
      throw UnknownGeneratorError("no image for generator '" + l.gen.name + "'");
    }
    const Word img = l.sign > 0 ? it->second : invert(it->second);
    raw.insert(raw.end(), img.letters().begin(), img.letters().end());
  }
  return reduce(raw);
}

Word apply_hom(const Homomorphism& h, const Word& w) {
  return substitute(w, h.images);
}

bool verify_hom_pair_inverse(const Homomorphism& h1, const Homomorphism& h2) {
  if (!(h1.target == h2.source) || !(h2.target == h1.source)) {
    throw SignatureMismatchError("homomorphism pair signatures do not match");
  }
  for (const Generator& g : h1.source.generators) {
    Word w = Word::generator(g.name);
    if (!(apply_hom(h2, apply_hom(h1, w)) == w)) return false;
  }
  for (const Generator& g : h2.source.generators) {
    Word w = Word::generator(g.name);
    if (!(apply_hom(h1, apply_hom(h2, w)) == w)) return false;
  }
  return true;
}

namespace {

Word rotation(const Word& w, std::size_t start) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    raw.push_back(ls[(start + i) % ls.size()]);
  }
  // Rotations of a cyclically reduced word are reduced.
  return reduce(raw);
}

void fold_rotations(const Word& v, Word& best, bool& have) {
  for (std::size_t s = 0; s < v.size(); ++s) {
    Word r = rotation(v, s);
    if (!have || word_less(r, best)) {
      best = r;
      have = true;
    }
  }
}

}  // namespace

Word canonical_cyclic_form(const Word& w) {
  Word core = cyclically_reduce(w).core;
  if (core.empty()) return core;
  Word best;
  bool have = false;
  fold_rotations(core, best, have);
  fold_rotations(invert(core), best, have);
  return best;
}

bool cyclic_equivalent(const Word& u, const Word& v) {
  return canonical_cyclic_form(u) == canonical_cyclic_form(v);
}

bool hom_respects_relators(const Homomorphism& h) {
  for (const Word& r : h.source.relators) {
    Word img = apply_hom(h, r);
    if (img.empty()) continue;
    bool matched = false;
    for (const Word& t : h.target.relators) {
      if (cyclic_equivalent(img, t)) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace rforge
