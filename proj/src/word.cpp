#include "rforge/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace rforge {

Word reduce(std::span<const Letter> raw) {
  Word result;
  auto& out = result.letters_;
  out.reserve(raw.size());
  for (const Letter& l : raw) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return result;
}

Word Word::from_letters(std::vector<Letter> raw) {
  return reduce(std::span<const Letter>(raw));
}

bool word_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.letters().begin(), a.letters().end(),
                                      b.letters().begin(), b.letters().end(), letter_less);
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  // Inverse of a reduced word is reduced.
  return reduce(out);
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> raw;
  raw.reserve(a.size() + b.size());
  raw.insert(raw.end(), a.letters().begin(), a.letters().end());
  raw.insert(raw.end(), b.letters().begin(), b.letters().end());
  return reduce(raw);
}

Word conjugate(const Word& x, const Word& y) {
  return invert(y) * x * y;
}

Word commutator(const Word& x, const Word& y) {
  return invert(x) * invert(y) * x * y;
}

Word power(const Word& w, int n) {
  if (n < 0) return power(invert(w), -n);
  std::vector<Letter> raw;
  raw.reserve(w.size() * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    raw.insert(raw.end(), w.letters().begin(), w.letters().end());
  }
  return reduce(raw);
}

CyclicReduction cyclically_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t i = 0;
  std::size_t j = ls.size();
  while (j - i >= 2 && ls[i] == ls[j - 1].inverse()) {
    ++i;
    --j;
  }
  CyclicReduction cr;
  cr.core = reduce(std::span<const Letter>(ls.data() + i, j - i));
  cr.conjugator = reduce(std::span<const Letter>(ls.data() + j, ls.size() - j));
  return cr;
}

int exponent_sum(const Word& w, const Generator& g) {
  int sum = 0;
  for (const Letter& l : w.letters()) {
    if (l.gen == g) sum += l.sign;
  }
  return sum;
}

int ExponentVector::get(const Generator& g) const {
  auto it = sums_.find(g);
  return it == sums_.end() ? 0 : it->second;
}

bool ExponentVector::is_zero() const {
  for (const auto& [g, e] : sums_) {
    if (e != 0) return false;
  }
  return true;
}

bool operator==(const ExponentVector& a, const ExponentVector& b) {
  for (const auto& [g, e] : a.sums_) {
    if (e != b.get(g)) return false;
  }
  for (const auto& [g, e] : b.sums_) {
    if (e != a.get(g)) return false;
  }
  return true;
}

std::string ExponentVector::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [g, e] : sums_) {
    if (!first) out += ", ";
    first = false;
    out += g.name + ": " + std::to_string(e);
  }
  out += "}";
  return out;
}

ExponentVector abelianize(const Word& w) {
  std::map<Generator, int> sums;
  for (const Letter& l : w.letters()) {
    sums[l.gen] += l.sign;
  }
  return ExponentVector(std::move(sums));
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    int e = static_cast<int>(j - i) * ls[i].sign;
    if (!out.empty()) out += ' ';
    out += ls[i].gen.name;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

}  // namespace rforge
