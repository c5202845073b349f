// Words over the generators and their canonical forms.
//
// Elementary operations on words: (1) delete an adjacent equal pair ss,
// (2) swap adjacent letters st -> ts when m_st = 2. A word is reduced when no
// operation sequence shortens it. The canonical form of a group element is the
// ShortLex-least reduced word under the declared generator order.
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "racb/diagram.hpp"

namespace racb {

struct Word {
  std::vector<int> letters;

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend auto operator<=>(const Word&, const Word&) = default;
};

inline void validate_word(const CoxeterDiagram& d, const Word& w) {
  for (int s : w.letters) d.check_generator(s);
}

inline Word parse_word(const CoxeterDiagram& d, const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string name;
  while (in >> name) w.letters.push_back(d.generator_index(name));
  return w;
}

inline std::string format_word(const CoxeterDiagram& d, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += d.generator_name(w.letters[i]);
  }
  return out;
}

namespace detail {

// A word fails to be reduced iff two equal letters are separated only by
// letters commuting with them (the pair can then be brought together by
// swaps and deleted). Returns such a pair of positions, if any.
inline std::optional<std::pair<std::size_t, std::size_t>> deletable_pair(
    const CoxeterDiagram& d, const std::vector<int>& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    // Everything strictly between i and j commutes with w[i] once j is reached.
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[j] == w[i]) return std::make_pair(i, j);
      if (!d.commutes(w[i], w[j])) break;
    }
  }
  return std::nullopt;
}

// ShortLex normal form of a reduced word: repeatedly emit the least generator
// among the positions whose direct predecessors (equal or non-commuting
// earlier letters) have all been emitted.
inline std::vector<int> shortlex(const CoxeterDiagram& d, std::vector<int> w) {
  const std::size_t n = w.size();
  std::vector<int> pending(n, 0);
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (w[i] == w[j] || d.infinite_bond(w[i], w[j])) {
        succ[i].push_back(j);
        ++pending[j];
      }
  std::vector<int> out;
  out.reserve(n);
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && pending[i] == 0 && (best == n || w[i] < w[best])) best = i;
    done[best] = true;
    out.push_back(w[best]);
    for (std::size_t j : succ[best]) --pending[j];
  }
  return out;
}

}  // namespace detail

// The canonical (normal-form) representative of a group element.
struct GroupElement {
  Word normal;

  std::size_t length() const { return normal.length(); }
  bool is_identity() const { return normal.empty(); }

  static GroupElement identity() { return {}; }

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

inline bool is_reduced(const CoxeterDiagram& d, const Word& w) {
  validate_word(d, w);
  return !detail::deletable_pair(d, w.letters).has_value();
}

inline GroupElement reduce(const CoxeterDiagram& d, const Word& w) {
  validate_word(d, w);
  std::vector<int> letters = w.letters;
  while (auto pair = detail::deletable_pair(d, letters)) {
    letters.erase(letters.begin() + pair->second);
    letters.erase(letters.begin() + pair->first);
  }
  return GroupElement{Word{detail::shortlex(d, std::move(letters))}};
}

// Right descents: generators r with l(wr) < l(w), i.e. some occurrence of r can
// be moved past everything to its right.
inline std::vector<int> right_descents(const CoxeterDiagram& d, const Word& w) {
  std::vector<bool> seen(d.rank(), false);
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    bool movable = true;
    for (std::size_t k = i + 1; k < w.letters.size() && movable; ++k)
      movable = d.commutes(w.letters[i], w.letters[k]);
    if (movable) seen[w.letters[i]] = true;
  }
  std::vector<int> out;
  for (int s = 0; s < d.rank(); ++s)
    if (seen[s]) out.push_back(s);
  return out;
}

// w * s in canonical form, plus the length sign: +1 ascent, -1 descent.
inline std::pair<GroupElement, int> multiply(const CoxeterDiagram& d, const GroupElement& g,
                                             int s) {
  d.check_generator(s);
  const auto& w = g.normal.letters;
  for (std::size_t i = w.size(); i-- > 0;) {
    bool movable = w[i] == s;
    for (std::size_t k = i + 1; k < w.size() && movable; ++k)
      movable = d.commutes(s, w[k]);
    if (movable) {
      std::vector<int> shorter = w;
      shorter.erase(shorter.begin() + i);
      return {GroupElement{Word{detail::shortlex(d, std::move(shorter))}}, -1};
    }
  }
  std::vector<int> longer = w;
  longer.push_back(s);
  return {GroupElement{Word{detail::shortlex(d, std::move(longer))}}, +1};
}

inline GroupElement inverse(const CoxeterDiagram& d, const GroupElement& g) {
  std::vector<int> rev(g.normal.letters.rbegin(), g.normal.letters.rend());
  return GroupElement{Word{detail::shortlex(d, std::move(rev))}};
}

inline GroupElement mult(const CoxeterDiagram& d, const GroupElement& a, const GroupElement& b) {
  Word w;
  w.letters = a.normal.letters;
  w.letters.insert(w.letters.end(), b.normal.letters.begin(), b.normal.letters.end());
  return reduce(d, w);
}

// All reduced words representing the same element as w: breadth-first closure
// of {w} under adjacent commuting swaps (Tits: swaps alone connect the reduced
// representations). Output is sorted.
inline std::vector<Word> enumerate_reps(const CoxeterDiagram& d, const Word& w) {
  if (!is_reduced(d, w)) throw std::invalid_argument("enumerate_reps: word is not reduced");
  std::set<std::vector<int>> seen{w.letters};
  std::vector<std::vector<int>> frontier{w.letters};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& u : frontier) {
      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        if (!d.commutes(u[i], u[i + 1])) continue;
        std::vector<int> v = u;
        std::swap(v[i], v[i + 1]);
        if (seen.insert(v).second) next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Word> out;
  out.reserve(seen.size());
  for (const auto& u : seen) out.push_back(Word{u});
  return out;
}

}  // namespace racb
