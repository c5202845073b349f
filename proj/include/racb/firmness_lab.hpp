// Exhaustive searches behind the quantitative firmness bounds: longest
// reduced increasing sequences under a chain constraint, the stall bound
// k(w), and the length threshold d(n) past which firmness exceeds n.
//
// None of these quantities has a closed form; each is computed per diagram by
// a complete search whose termination the surrounding theory guarantees, with
// a hard node budget as a guard.
#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "racb/errors.hpp"
#include "racb/poset.hpp"
#include "racb/word.hpp"

namespace racb {

struct IncreasingSequence {
  GroupElement base;       // identity for plain sequences
  std::vector<int> steps;  // generator indices, applied left to right
};

// True iff every step is an ascent: l(base r_1...r_i) grows strictly with i.
inline bool is_increasing(const CoxeterDiagram& d, const GroupElement& base,
                          const std::vector<int>& steps) {
  GroupElement g = base;
  for (int s : steps) {
    auto [next, sign] = multiply(d, g, s);
    if (sign < 0) return false;
    g = next;
  }
  return true;
}

struct ChainSearchResult {
  int length = 0;
  IncreasingSequence witness;
};

namespace detail {

struct ChainSearch {
  const CoxeterDiagram& d;
  int bound;
  std::size_t cap;
  std::size_t visited = 0;
  std::vector<int> steps;
  std::vector<int> chain_len;  // longest non-commuting chain ending at each step
  ChainSearchResult best;

  void run(const GroupElement& g) {
    if (++visited > cap)
      throw cap_exceeded("max_bounded_chain_sequence: node budget exhausted");
    if (static_cast<int>(steps.size()) > best.length) {
      best.length = static_cast<int>(steps.size());
      best.witness.steps = steps;
    }
    for (int s = 0; s < d.rank(); ++s) {
      auto [next, sign] = multiply(d, g, s);
      if (sign < 0) continue;
      int len = 1;
      for (std::size_t j = 0; j < steps.size(); ++j)
        if (d.infinite_bond(steps[j], s) && chain_len[j] + 1 > len) len = chain_len[j] + 1;
      if (len > bound) continue;
      steps.push_back(s);
      chain_len.push_back(len);
      run(next);
      steps.pop_back();
      chain_len.pop_back();
    }
  }
};

}  // namespace detail

// Longest reduced increasing sequence from the identity in which every
// subsequence of consecutively non-commuting letters has at most b elements,
// together with one witness. This is the empirical f(b) for the diagram.
inline ChainSearchResult max_bounded_chain_sequence(const CoxeterDiagram& d, int b,
                                                    std::size_t cap = kDefaultSearchCap) {
  if (b < 1) throw std::invalid_argument("max_bounded_chain_sequence: b must be >= 1");
  detail::ChainSearch search{d, b, cap};
  search.run(GroupElement::identity());
  search.best.witness.base = GroupElement::identity();
  return search.best;
}

namespace detail {

inline int longest_stall(const CoxeterDiagram& d, const GroupElement& g, int target,
                         std::size_t cap, std::size_t& visited) {
  if (++visited > cap) throw cap_exceeded("k_of: node budget exhausted");
  int best = 0;
  for (int s = 0; s < d.rank(); ++s) {
    auto [next, sign] = multiply(d, g, s);
    if (sign < 0) continue;
    if (firmness(d, next) != target) continue;  // ascents never lower firmness
    int len = 1 + longest_stall(d, next, target, cap, visited);
    if (len > best) best = len;
  }
  return best;
}

}  // namespace detail

// Minimal k such that every reduced increasing g-sequence of length k strictly
// raises firmness: one more than the longest ascent path holding F# constant.
inline int k_of(const CoxeterDiagram& d, const GroupElement& g,
                std::size_t cap = kDefaultSearchCap) {
  std::size_t visited = 0;
  return 1 + detail::longest_stall(d, g, firmness(d, g), cap, visited);
}

struct DnResult {
  int d = 0;                     // largest length carrying an element with F# <= n
  int checked_up_to_length = 0;  // first length at which every element has F# > n
};

// Level-by-level enumeration of W by canonical forms. Once every element of
// some length has F# > n, no longer element can do better (ascents never lower
// firmness), so the search stops there.
inline DnResult d_of(const CoxeterDiagram& d, int n, std::size_t cap = kDefaultSearchCap) {
  if (n < 0) throw std::invalid_argument("d_of: n must be >= 0");
  std::size_t visited = 1;
  std::set<Word> frontier{Word{}};
  for (int length = 0;; ++length) {
    bool any_low = false;
    for (const Word& w : frontier)
      if (firmness(d, GroupElement{w}) <= n) { any_low = true; break; }
    if (!any_low) return DnResult{length - 1, length};
    std::set<Word> next;
    for (const Word& w : frontier) {
      for (int s = 0; s < d.rank(); ++s) {
        auto [g, sign] = multiply(d, GroupElement{w}, s);
        if (sign < 0) continue;
        if (next.insert(g.normal).second && ++visited > cap)
          throw cap_exceeded("d_of: inconclusive up to cap");
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace racb
