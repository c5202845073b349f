// Closing squares, firm chambers, n-flexibility and the square closure.
//
// The flexible set is computed two independent ways: directly from the
// firmness of Weyl distances, and as the square closure of a ball. Their
// agreement is the content of the verification below, so the two routes never
// share code.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "racb/building.hpp"
#include "racb/errors.hpp"
#include "racb/firmness_lab.hpp"
#include "racb/poset.hpp"

namespace racb {

// A chamber is firm with respect to c0 when its Weyl distance from c0 is firm.
inline bool is_firm_chamber(const CoxeterDiagram& d, const Chamber& c0, const Chamber& c) {
  if (c == c0) throw std::invalid_argument("is_firm_chamber: chambers coincide");
  return is_firm(d, weyl_distance(d, c0, c));
}

// The sphere around c0 split into firm and non-firm chambers.
struct SpherePartition {
  int n = 0;
  std::vector<Chamber> firm;      // A1(n)
  std::vector<Chamber> not_firm;  // A2(n)
};

inline SpherePartition sphere_partition(const CoxeterDiagram& d, const Chamber& c0, int n,
                                        std::size_t cap = kDefaultChamberCap) {
  SpherePartition out;
  out.n = n;
  for (const Chamber& c : sphere(d, c0, n, cap)) {
    if (n > 0 && is_firm_chamber(d, c0, c))
      out.firm.push_back(c);
    else
      out.not_firm.push_back(c);
  }
  return out;
}

namespace detail {

inline Syllable single_syllable(const CoxeterDiagram& d, const Chamber& from, const Chamber& to,
                                const char* what) {
  const Chamber diff = chamber_diff(d, from, to);
  if (diff.syllable_count() != 1)
    throw std::invalid_argument(std::string(what) + ": chambers are not adjacent");
  return diff.syllables[0];
}

}  // namespace detail

// Closing Squares, downward: given c1, c2 on sphere n and a common upper
// neighbor c3 on sphere n+1 reached by distinct colors t, s, the colors must
// commute and a unique lower chamber c4 on sphere n-1 closes the square.
inline Chamber close_square_down(const CoxeterDiagram& d, const Chamber& c0, const Chamber& c1,
                                 const Chamber& c2, const Chamber& c3) {
  const int n = gallery_distance(d, c0, c1);
  if (gallery_distance(d, c0, c2) != n || gallery_distance(d, c0, c3) != n + 1)
    throw std::invalid_argument("close_square_down: sphere preconditions violated");
  const Syllable to_c3_from_c1 = detail::single_syllable(d, c1, c3, "close_square_down");
  const Syllable to_c2_from_c3 = detail::single_syllable(d, c3, c2, "close_square_down");
  const int t = to_c3_from_c1.gen;
  const int s = to_c2_from_c3.gen;
  if (s == t) throw std::invalid_argument("close_square_down: colors coincide");
  if (!d.commutes(s, t))
    throw std::logic_error("close_square_down: non-commuting colors contradict the model");
  const Chamber c4 = chamber_mult(d, c1, Chamber{{to_c2_from_c3}});
  if (gallery_distance(d, c0, c4) != n - 1)
    throw std::logic_error("close_square_down: closing chamber missed sphere n-1");
  return c4;
}

// Closing squares, upward: c4 on sphere n-1 with two upper neighbors c1, c2
// reached by distinct commuting colors; returns the unique chamber of sphere
// n+1 completing the square.
inline Chamber close_square_up(const CoxeterDiagram& d, const Chamber& c0, const Chamber& c4,
                               const Chamber& c1, const Chamber& c2) {
  const int n = gallery_distance(d, c0, c1);
  if (gallery_distance(d, c0, c2) != n || gallery_distance(d, c0, c4) != n - 1)
    throw std::invalid_argument("close_square_up: sphere preconditions violated");
  const Syllable to_c1 = detail::single_syllable(d, c4, c1, "close_square_up");
  const Syllable to_c2 = detail::single_syllable(d, c4, c2, "close_square_up");
  if (to_c1.gen == to_c2.gen) throw std::invalid_argument("close_square_up: colors coincide");
  if (!d.commutes(to_c1.gen, to_c2.gen))
    throw std::invalid_argument("close_square_up: colors do not commute");
  const Chamber c3 = chamber_mult(d, c1, Chamber{{to_c2}});
  if (gallery_distance(d, c0, c3) != n + 1)
    throw std::logic_error("close_square_up: completed chamber missed sphere n+1");
  return c3;
}

// Smallest superset of the given chambers closed under squares with respect
// to c0. A radius guard bounds the fixed point: the closure of a set of
// maximal distance m stays within distance d(m), so by default that threshold
// is computed live and a chamber beyond it is an internal error.
inline std::vector<Chamber> square_closure(const CoxeterDiagram& d, const Chamber& c0,
                                           const std::vector<Chamber>& chambers,
                                           std::size_t cap = kDefaultChamberCap,
                                           std::optional<int> max_radius = std::nullopt) {
  std::set<Chamber> members(chambers.begin(), chambers.end());
  std::map<Chamber, int> dist;
  auto distance = [&](const Chamber& c) {
    auto it = dist.find(c);
    if (it == dist.end()) it = dist.emplace(c, gallery_distance(d, c0, c)).first;
    return it->second;
  };
  int guard = 0;
  if (max_radius) {
    guard = *max_radius;
  } else {
    int m = 0;
    for (const Chamber& c : members) m = std::max(m, distance(c));
    guard = d_of(d, m, cap).d;
  }

  std::vector<Chamber> queue(members.begin(), members.end());
  while (!queue.empty()) {
    const Chamber apex = queue.back();
    queue.pop_back();
    const int base_dist = distance(apex);
    // In-set upper neighbors of the apex, grouped by color.
    std::vector<std::pair<int, Chamber>> uppers;
    for (int s = 0; s < d.rank(); ++s)
      for (int v = 1; v < d.thickness(s); ++v) {
        Chamber nb = chamber_mult(d, apex, Chamber{{Syllable{s, v}}});
        if (members.count(nb) && distance(nb) == base_dist + 1)
          uppers.emplace_back(s, std::move(nb));
      }
    for (std::size_t a = 0; a < uppers.size(); ++a) {
      for (std::size_t b = a + 1; b < uppers.size(); ++b) {
        const auto& [s, c1] = uppers[a];
        const auto& [t, c2] = uppers[b];
        if (s == t || !d.commutes(s, t)) continue;
        Chamber c3 = close_square_up(d, c0, apex, c1, c2);
        if (members.count(c3)) continue;
        if (distance(c3) > guard)
          throw std::logic_error("square_closure: escaped the radius guard");
        if (members.size() >= cap) throw cap_exceeded("square_closure: chamber budget exhausted");
        // The new chamber may act as an upper partner for its lower neighbors
        // and as an apex itself.
        for (int r = 0; r < d.rank(); ++r)
          for (int v = 1; v < d.thickness(r); ++v) {
            Chamber low = chamber_mult(d, c3, Chamber{{Syllable{r, v}}});
            if (members.count(low) && distance(low) == distance(c3) - 1) queue.push_back(low);
          }
        queue.push_back(c3);
        members.insert(std::move(c3));
      }
    }
  }
  return std::vector<Chamber>(members.begin(), members.end());
}

// All chambers of the ball whose Weyl distance from c0 has firmness at most n.
// The radius must dominate the live d(n) threshold so that the ball provably
// contains every such chamber.
inline std::vector<Chamber> flex_set(const CoxeterDiagram& d, const Chamber& c0, int n,
                                     int radius, std::size_t cap = kDefaultChamberCap) {
  const DnResult dn = d_of(d, n, cap);
  if (radius < dn.d)
    throw std::invalid_argument("flex_set: radius " + std::to_string(radius) +
                                " below required " + std::to_string(dn.d));
  std::vector<Chamber> out;
  for (const auto& [c, dist] : ball_map(d, c0, radius, cap))
    if (firmness(d, weyl_distance(d, c0, c)) <= n) out.push_back(c);
  return out;
}

struct FlexReport {
  bool equal = false;
  int flex_size = 0;
  int closure_size = 0;
  int max_distance = 0;  // witness radius of the flexible set
  int d_of_n = 0;
  std::vector<Chamber> only_in_flex;     // falsification witnesses, if any
  std::vector<Chamber> only_in_closure;
};

// Desk-scale verification that the square closure of the n-ball equals the
// n-flexible set. The two sides are computed by unrelated routes.
inline FlexReport verify_flex_theorem(const CoxeterDiagram& d, const Chamber& c0, int n,
                                      int radius, std::size_t cap = kDefaultChamberCap) {
  FlexReport report;
  report.d_of_n = d_of(d, n, cap).d;
  const std::vector<Chamber> flex = flex_set(d, c0, n, radius, cap);
  std::vector<Chamber> seed;
  for (const auto& [c, dist] : ball_map(d, c0, n, cap)) seed.push_back(c);
  const std::vector<Chamber> closure = square_closure(d, c0, seed, cap);
  report.flex_size = static_cast<int>(flex.size());
  report.closure_size = static_cast<int>(closure.size());
  for (const Chamber& c : flex)
    report.max_distance = std::max(report.max_distance, gallery_distance(d, c0, c));
  std::set_difference(flex.begin(), flex.end(), closure.begin(), closure.end(),
                      std::back_inserter(report.only_in_flex));
  std::set_difference(closure.begin(), closure.end(), flex.begin(), flex.end(),
                      std::back_inserter(report.only_in_closure));
  report.equal = report.only_in_flex.empty() && report.only_in_closure.empty() &&
                 report.max_distance <= report.d_of_n;
  return report;
}

}  // namespace racb
