// The dependence order on letter positions of a reduced word, and firmness.
//
// For a reduced word w = s_1...s_l, position i precedes position j (written
// i > _w j here, with i < j) when the letter at i comes before the letter at j
// in every reduced representation of the element. Over a right-angled diagram
// this is the transitive closure of the direct relation
//   { (i,j) : i < j and (s_i = s_j or m(s_i,s_j) = inf) },
// which the test suite validates against the representation-set definition.
// Positions are 1-based throughout, matching the file/CLI output convention.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "racb/word.hpp"

namespace racb {

struct WordPoset {
  Word word;
  // rel[i][j] (0-based) true iff position i+1 precedes position j+1.
  std::vector<std::vector<bool>> rel;

  std::size_t size() const { return word.length(); }

  // 1-based: does i come before j in every reduced representation?
  bool precedes(std::size_t i, std::size_t j) const {
    check_position(i);
    check_position(j);
    return rel[i - 1][j - 1];
  }

  void check_position(std::size_t i) const {
    if (i < 1 || i > size()) throw std::invalid_argument("poset: position out of range");
  }
};

inline WordPoset word_poset(const CoxeterDiagram& d, const Word& w) {
  if (!is_reduced(d, w)) throw std::invalid_argument("word_poset: word is not reduced");
  const std::size_t n = w.length();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (w.letters[i] == w.letters[j] || d.infinite_bond(w.letters[i], w.letters[j]))
        rel[i][j] = true;
  // Floyd-Warshall style closure; the relation only points forward.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < k; ++i)
      if (rel[i][k])
        for (std::size_t j = k + 1; j < n; ++j)
          if (rel[k][j]) rel[i][j] = true;
  return WordPoset{w, std::move(rel)};
}

// I_w(i): the positions that precede i in every reduced representation (1-based).
inline std::vector<std::size_t> i_set(const WordPoset& p, std::size_t i) {
  p.check_position(i);
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j < i; ++j)
    if (p.rel[j - 1][i - 1]) out.push_back(j);
  return out;
}

// An element is firm when exactly one generator is a descent; equivalently its
// final letter is the same in every reduced representation.
inline bool is_firm(const CoxeterDiagram& d, const GroupElement& g) {
  if (g.is_identity()) throw std::invalid_argument("is_firm: identity has no final letter");
  return right_descents(d, g.normal).size() == 1;
}

// Firmness F#: the longest firm prefix over all reduced representations,
// computed as max_i |I_w(i)| + 1 on the canonical word. By convention the
// identity has firmness 0.
inline int firmness(const CoxeterDiagram& d, const GroupElement& g) {
  if (g.is_identity()) return 0;
  const WordPoset p = word_poset(d, g.normal);
  const std::size_t n = p.size();
  std::size_t best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t count = 0;
    for (std::size_t j = 1; j < i; ++j)
      if (p.rel[j - 1][i - 1]) ++count;
    best = std::max(best, count);
  }
  return static_cast<int>(best) + 1;
}

// A reduced representation of w whose prefix is exactly the letters at the
// positions of I_w(i) (in position order) followed by s_i; that prefix is firm.
// Every chain forcing j before i runs inside I_w(i), so splitting the word into
// the closed set I_w(i) + {i} and its complement is a valid rearrangement.
inline Word firm_rearrangement(const CoxeterDiagram& d, const Word& w, std::size_t i) {
  const WordPoset p = word_poset(d, w);
  p.check_position(i);
  Word out;
  out.letters.reserve(w.length());
  for (std::size_t j : i_set(p, i)) out.letters.push_back(w.letters[j - 1]);
  out.letters.push_back(w.letters[i - 1]);
  for (std::size_t j = 1; j <= w.length(); ++j)
    if (j != i && !p.rel[j - 1][i - 1]) out.letters.push_back(w.letters[j - 1]);
  return out;
}

}  // namespace racb
