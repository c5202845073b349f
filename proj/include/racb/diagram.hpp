// Right-angled Coxeter diagrams: a generator set with bond entries in {1,2,inf},
// plus an optional per-generator panel thickness for the building modules.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace racb {

class CoxeterDiagram {
 public:
  CoxeterDiagram(std::vector<std::string> generators,
                 std::vector<std::pair<std::string, std::string>> commuting_pairs,
                 std::map<std::string, int> thickness = {}) {
    if (generators.empty()) throw std::invalid_argument("diagram: no generators");
    names_ = std::move(generators);
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw std::invalid_argument("diagram: empty generator name");
      if (!index_.emplace(names_[i], static_cast<int>(i)).second)
        throw std::invalid_argument("diagram: duplicate generator '" + names_[i] + "'");
    }
    const int n = rank();
    commutes_.assign(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : commuting_pairs) {
      const int s = generator_index(a);
      const int t = generator_index(b);
      if (s == t)
        throw std::invalid_argument("diagram: commuting pair repeats generator '" + a + "'");
      commutes_[s][t] = commutes_[t][s] = true;
    }
    if (!thickness.empty()) {
      std::vector<int> q(n, 0);
      for (const auto& [name, qs] : thickness) {
        if (qs < 2)
          throw std::invalid_argument("diagram: thickness of '" + name + "' must be >= 2");
        q[generator_index(name)] = qs;
      }
      for (int s = 0; s < n; ++s)
        if (q[s] == 0)
          throw std::invalid_argument("diagram: thickness missing for '" + names_[s] + "'");
      thickness_ = std::move(q);
    }
  }

  int rank() const { return static_cast<int>(names_.size()); }

  const std::string& generator_name(int s) const { return names_.at(s); }

  int generator_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
      throw std::invalid_argument("diagram: unknown generator '" + name + "'");
    return it->second;
  }

  void check_generator(int s) const {
    if (s < 0 || s >= rank()) throw std::invalid_argument("diagram: generator index out of range");
  }

  // m_st == 2 (distinct commuting generators).
  bool commutes(int s, int t) const { return s != t && commutes_[s][t]; }

  // m_st == inf.
  bool infinite_bond(int s, int t) const { return s != t && !commutes_[s][t]; }

  bool has_thickness() const { return thickness_.has_value(); }

  int thickness(int s) const {
    if (!thickness_) throw std::invalid_argument("diagram: thickness not specified");
    return (*thickness_)[s];
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<std::vector<bool>> commutes_;
  std::optional<std::vector<int>> thickness_;
};

// Diagram file format (UTF-8 JSON):
//   {"generators": ["a","b","c"], "commuting": [["a","b"]], "thickness": {"a": 2}}
// Unlisted distinct pairs default to m = inf; "thickness" is optional but, when
// present, must cover every generator with a value >= 2.
inline CoxeterDiagram parse_diagram(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("diagram: malformed JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("generators"))
      throw std::invalid_argument("diagram: missing \"generators\"");
    std::vector<std::string> gens = doc.at("generators").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> pairs;
    if (doc.contains("commuting")) {
      for (const auto& entry : doc.at("commuting")) {
        if (!entry.is_array() || entry.size() != 2)
          throw std::invalid_argument("diagram: commuting entries must be pairs");
        pairs.emplace_back(entry.at(0).get<std::string>(), entry.at(1).get<std::string>());
      }
    }
    std::map<std::string, int> thickness;
    if (doc.contains("thickness"))
      thickness = doc.at("thickness").get<std::map<std::string, int>>();
    return CoxeterDiagram(std::move(gens), std::move(pairs), std::move(thickness));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("diagram: malformed document: ") + e.what());
  }
}

inline void check_subset(const CoxeterDiagram& d, const std::vector<int>& J) {
  for (int s : J) d.check_generator(s);
}

// J^perp: generators outside J commuting with every member of J.
inline std::vector<int> j_perp(const CoxeterDiagram& d, const std::vector<int>& J) {
  check_subset(d, J);
  std::vector<int> out;
  for (int t = 0; t < d.rank(); ++t) {
    if (std::find(J.begin(), J.end(), t) != J.end()) continue;
    bool all = true;
    for (int s : J)
      if (!d.commutes(t, s)) { all = false; break; }
    if (all) out.push_back(t);
  }
  return out;
}

// A subset is spherical iff all its distinct members pairwise commute.
inline bool is_spherical(const CoxeterDiagram& d, const std::vector<int>& J) {
  check_subset(d, J);
  for (std::size_t i = 0; i < J.size(); ++i)
    for (std::size_t j = i + 1; j < J.size(); ++j)
      if (J[i] != J[j] && !d.commutes(J[i], J[j])) return false;
  return true;
}

}  // namespace racb
