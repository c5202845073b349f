// Explicit model of the semi-regular right-angled building of a given type
// and thickness: the graph product of cyclic groups Z/q_s over the commuting
// graph. Chambers are normal-form group elements, s-adjacency is right
// multiplication by a nonzero s-syllable, and the Weyl distance is the image
// in W of the type word. Any correct model with the same type and thickness
// is isomorphic to this one; the building axioms themselves are property
// tests, not assumptions.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "racb/errors.hpp"
#include "racb/word.hpp"

namespace racb {

struct Syllable {
  int gen = 0;
  int val = 0;  // 1..q_s-1 in canonical form; 0 encodes "no move" on input

  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

struct Chamber {
  std::vector<Syllable> syllables;

  bool is_base() const { return syllables.empty(); }
  std::size_t syllable_count() const { return syllables.size(); }

  Word type_word() const {
    Word w;
    w.letters.reserve(syllables.size());
    for (const Syllable& s : syllables) w.letters.push_back(s.gen);
    return w;
  }

  friend auto operator<=>(const Chamber&, const Chamber&) = default;
};

namespace detail {

inline void require_thickness(const CoxeterDiagram& d) {
  if (!d.has_thickness())
    throw std::invalid_argument("building: diagram has no thickness");
}

}  // namespace detail

// Normal form in the graph product: merge same-generator syllables that can be
// brought together (value addition mod q_s, dropping zero), then order the
// result ShortLex by generator. The type word of the result is the canonical
// reduced word of the Weyl distance from the base chamber.
inline Chamber canonicalize_chamber(const CoxeterDiagram& d, std::vector<Syllable> raw) {
  detail::require_thickness(d);
  for (const Syllable& s : raw) {
    d.check_generator(s.gen);
    if (s.val < 0 || s.val >= d.thickness(s.gen))
      throw std::invalid_argument("chamber: syllable value out of range");
  }
  std::erase_if(raw, [](const Syllable& s) { return s.val == 0; });
  // Merge loop: a pair of same-generator syllables separated only by commuting
  // generators collapses to one syllable (or to nothing when the values cancel).
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < raw.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < raw.size(); ++j) {
        if (raw[j].gen == raw[i].gen) {
          const int q = d.thickness(raw[i].gen);
          raw[i].val = (raw[i].val + raw[j].val) % q;
          raw.erase(raw.begin() + j);
          if (raw[i].val == 0) raw.erase(raw.begin() + i);
          merged = true;
          break;
        }
        if (!d.commutes(raw[i].gen, raw[j].gen)) break;
      }
    }
  }
  // ShortLex order on the type word, carrying values along.
  const std::size_t n = raw.size();
  std::vector<int> pending(n, 0);
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!d.commutes(raw[i].gen, raw[j].gen)) {
        succ[i].push_back(j);
        ++pending[j];
      }
  Chamber out;
  out.syllables.reserve(n);
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && pending[i] == 0 && (best == n || raw[i].gen < raw[best].gen)) best = i;
    done[best] = true;
    out.syllables.push_back(raw[best]);
    for (std::size_t j : succ[best]) --pending[j];
  }
  return out;
}

inline Chamber chamber_mult(const CoxeterDiagram& d, const Chamber& a, const Chamber& b) {
  std::vector<Syllable> raw = a.syllables;
  raw.insert(raw.end(), b.syllables.begin(), b.syllables.end());
  return canonicalize_chamber(d, std::move(raw));
}

inline Chamber chamber_inverse(const CoxeterDiagram& d, const Chamber& c) {
  detail::require_thickness(d);
  std::vector<Syllable> raw(c.syllables.rbegin(), c.syllables.rend());
  for (Syllable& s : raw) s.val = d.thickness(s.gen) - s.val;
  return canonicalize_chamber(d, std::move(raw));
}

// a^{-1} b, the move taking a to b.
inline Chamber chamber_diff(const CoxeterDiagram& d, const Chamber& a, const Chamber& b) {
  return chamber_mult(d, chamber_inverse(d, a), b);
}

// Chamber text syntax: space-separated "s:v" pairs; the empty string is the
// base chamber.
inline Chamber parse_chamber(const CoxeterDiagram& d, const std::string& text) {
  std::vector<Syllable> raw;
  std::istringstream in(text);
  std::string item;
  while (in >> item) {
    const auto colon = item.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == item.size())
      throw std::invalid_argument("chamber: expected \"gen:value\", got '" + item + "'");
    int val = 0;
    try {
      std::size_t used = 0;
      val = std::stoi(item.substr(colon + 1), &used);
      if (used != item.size() - colon - 1) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("chamber: bad syllable value in '" + item + "'");
    }
    raw.push_back(Syllable{d.generator_index(item.substr(0, colon)), val});
  }
  return canonicalize_chamber(d, std::move(raw));
}

inline std::string format_chamber(const CoxeterDiagram& d, const Chamber& c) {
  std::string out;
  for (std::size_t i = 0; i < c.syllables.size(); ++i) {
    if (i) out += ' ';
    out += d.generator_name(c.syllables[i].gen);
    out += ':';
    out += std::to_string(c.syllables[i].val);
  }
  return out;
}

// The color connecting two distinct adjacent chambers, if any.
inline std::optional<int> adjacency(const CoxeterDiagram& d, const Chamber& a,
                                    const Chamber& b) {
  const Chamber diff = chamber_diff(d, a, b);
  if (diff.syllable_count() == 1) return diff.syllables[0].gen;
  return std::nullopt;
}

inline GroupElement weyl_distance(const CoxeterDiagram& d, const Chamber& a, const Chamber& b) {
  return GroupElement{chamber_diff(d, a, b).type_word()};
}

inline int gallery_distance(const CoxeterDiagram& d, const Chamber& a, const Chamber& b) {
  return static_cast<int>(chamber_diff(d, a, b).syllable_count());
}

// The q_s chambers of the s-panel through c, sorted.
inline std::vector<Chamber> panel(const CoxeterDiagram& d, const Chamber& c, int s) {
  detail::require_thickness(d);
  d.check_generator(s);
  std::vector<Chamber> out;
  for (int v = 0; v < d.thickness(s); ++v)
    out.push_back(chamber_mult(d, c, Chamber{{Syllable{s, v}}}));
  std::sort(out.begin(), out.end());
  return out;
}

// Chambers at gallery distance <= n from c0, with their distances, enumerated
// by frontier BFS over panel moves.
inline std::map<Chamber, int> ball_map(const CoxeterDiagram& d, const Chamber& c0, int n,
                                       std::size_t cap = kDefaultChamberCap) {
  detail::require_thickness(d);
  if (n < 0) throw std::invalid_argument("ball: negative radius");
  std::map<Chamber, int> dist{{c0, 0}};
  std::vector<Chamber> frontier{c0};
  for (int level = 1; level <= n && !frontier.empty(); ++level) {
    std::vector<Chamber> next;
    for (const Chamber& c : frontier) {
      for (int s = 0; s < d.rank(); ++s) {
        for (int v = 1; v < d.thickness(s); ++v) {
          Chamber nb = chamber_mult(d, c, Chamber{{Syllable{s, v}}});
          if (dist.emplace(nb, level).second) {
            if (dist.size() > cap) throw cap_exceeded("ball: chamber budget exhausted");
            next.push_back(std::move(nb));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

inline std::vector<Chamber> ball(const CoxeterDiagram& d, const Chamber& c0, int n,
                                 std::size_t cap = kDefaultChamberCap) {
  std::vector<Chamber> out;
  for (const auto& [c, dist] : ball_map(d, c0, n, cap)) out.push_back(c);
  return out;
}

inline std::vector<Chamber> sphere(const CoxeterDiagram& d, const Chamber& c0, int n,
                                   std::size_t cap = kDefaultChamberCap) {
  std::vector<Chamber> out;
  for (const auto& [c, dist] : ball_map(d, c0, n, cap))
    if (dist == n) out.push_back(c);
  return out;
}

// A residue named by its type and any chamber in it.
struct ResidueHandle {
  std::vector<int> type;  // sorted generator indices
  Chamber base;
};

inline ResidueHandle make_residue(const CoxeterDiagram& d, std::vector<int> type, Chamber base) {
  check_subset(d, type);
  std::sort(type.begin(), type.end());
  type.erase(std::unique(type.begin(), type.end()), type.end());
  return ResidueHandle{std::move(type), std::move(base)};
}

inline bool type_contains(const std::vector<int>& J, int s) {
  return std::binary_search(J.begin(), J.end(), s);
}

// All chambers of the residue; throws cap_exceeded if it is too large (or
// infinite, for a non-spherical type).
inline std::vector<Chamber> residue_chambers(const CoxeterDiagram& d, const ResidueHandle& r,
                                             std::size_t cap = kDefaultChamberCap) {
  detail::require_thickness(d);
  std::set<Chamber> seen{r.base};
  std::vector<Chamber> frontier{r.base};
  while (!frontier.empty()) {
    std::vector<Chamber> next;
    for (const Chamber& c : frontier) {
      for (int s : r.type) {
        for (int v = 1; v < d.thickness(s); ++v) {
          Chamber nb = chamber_mult(d, c, Chamber{{Syllable{s, v}}});
          if (seen.insert(nb).second) {
            if (seen.size() > cap) throw cap_exceeded("residue: chamber budget exhausted");
            next.push_back(std::move(nb));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return std::vector<Chamber>(seen.begin(), seen.end());
}

// The gate: the unique chamber of the residue closest to c. The J-part of the
// move from base to c is the set of syllables all of whose forced predecessors
// (non-commuting earlier syllables) also carry types in J; walking the base
// along exactly those syllables lands on the gate.
inline Chamber project(const CoxeterDiagram& d, const ResidueHandle& r, const Chamber& c) {
  const Chamber diff = chamber_diff(d, r.base, c);
  const std::size_t n = diff.syllable_count();
  std::vector<bool> outside(n, false);
  std::vector<Syllable> kept;
  for (std::size_t i = 0; i < n; ++i) {
    outside[i] = !type_contains(r.type, diff.syllables[i].gen);
    for (std::size_t j = 0; j < i && !outside[i]; ++j)
      if (outside[j] && !d.commutes(diff.syllables[j].gen, diff.syllables[i].gen))
        outside[i] = true;
    if (!outside[i]) kept.push_back(diff.syllables[i]);
  }
  std::vector<Syllable> raw = r.base.syllables;
  raw.insert(raw.end(), kept.begin(), kept.end());
  return canonicalize_chamber(d, std::move(raw));
}

// Residues are parallel iff they share a type J and their bases differ by an
// element of W_{J u J^perp}; on finite residues this matches the definition
// via mutual projections.
inline bool is_parallel(const CoxeterDiagram& d, const ResidueHandle& r1,
                        const ResidueHandle& r2) {
  if (r1.type != r2.type) return false;
  const std::vector<int> perp = j_perp(d, r1.type);
  const GroupElement delta = weyl_distance(d, r1.base, r2.base);
  for (int s : delta.normal.letters)
    if (!type_contains(r1.type, s) &&
        std::find(perp.begin(), perp.end(), s) == perp.end())
      return false;
  return true;
}

// Membership in the s-wing of c: does x project onto c through the s-panel at c?
inline bool wing_contains(const CoxeterDiagram& d, const Chamber& c, int s, const Chamber& x) {
  return project(d, make_residue(d, {s}, c), x) == c;
}

}  // namespace racb
