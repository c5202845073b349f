// racb - experiments over right-angled Coxeter groups and their semi-regular
// buildings. Machine-readable JSON reports go to stdout (and to --report when
// given); human-oriented notes go to stderr.
//
// Exit codes: 0 computed/verified, 1 falsified property, 2 usage error,
// 3 search budget exhausted.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "racb/racb.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct Options {
  std::string diagram_path;
  std::string word;
  std::string center;
  int n = 0;
  int radius = 0;
  int b = 1;
  std::uint64_t cap = 0;  // 0: per-module default
  std::string format = "json";
  std::string report_path;
  int threads = 1;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

struct Loaded {
  racb::CoxeterDiagram diagram;
  std::string hash;
};

Loaded load_diagram(const Options& opt) {
  if (opt.diagram_path.empty()) throw std::invalid_argument("--diagram is required");
  const std::string text = slurp(opt.diagram_path);
  return Loaded{racb::parse_diagram(text), fnv1a_hex(text)};
}

std::size_t cap_or(const Options& opt, std::size_t fallback) {
  return opt.cap ? static_cast<std::size_t>(opt.cap) : fallback;
}

void emit(const Options& opt, const json& report) {
  if (opt.format != "json")
    throw std::invalid_argument("--format " + opt.format + " is not supported here");
  const std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!opt.report_path.empty()) {
    std::ofstream out(opt.report_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write report '" + opt.report_path + "'");
    out << text;
  }
}

void emit_raw(const Options& opt, const std::string& text) {
  std::cout << text;
  if (!opt.report_path.empty()) {
    std::ofstream out(opt.report_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write report '" + opt.report_path + "'");
    out << text;
  }
}

json chamber_list(const racb::CoxeterDiagram& d, const std::vector<racb::Chamber>& chambers) {
  json out = json::array();
  for (const racb::Chamber& c : chambers) out.push_back(racb::format_chamber(d, c));
  return out;
}

int cmd_firmness(const Options& opt) {
  const Loaded in = load_diagram(opt);
  const racb::Word w = racb::parse_word(in.diagram, opt.word);
  json report{{"command", "firmness"}, {"diagram_hash", in.hash}, {"word", opt.word}};
  if (w.empty()) {
    report["F"] = 0;
    report["relations"] = json::array();
    emit(opt, report);
    return kExitOk;
  }
  if (!racb::is_reduced(in.diagram, w)) {
    const racb::GroupElement g = racb::reduce(in.diagram, w);
    throw std::invalid_argument("word is not reduced; its reduction is \"" +
                                racb::format_word(in.diagram, g.normal) + "\"");
  }
  const racb::GroupElement g{w};
  const racb::WordPoset poset = racb::word_poset(in.diagram, w);
  report["F"] = racb::firmness(in.diagram, g);
  json relations = json::array();
  for (std::size_t i = 1; i <= poset.size(); ++i)
    for (std::size_t j = i + 1; j <= poset.size(); ++j)
      if (poset.precedes(i, j)) relations.push_back({i, j});
  report["relations"] = relations;
  json isets = json::array();
  std::size_t max_pos = 1;
  for (std::size_t i = 1; i <= poset.size(); ++i) {
    const auto set = racb::i_set(poset, i);
    if (set.size() > racb::i_set(poset, max_pos).size()) max_pos = i;
    isets.push_back(set);
  }
  report["I"] = isets;
  report["firm_rearrangement"] =
      racb::format_word(in.diagram, racb::firm_rearrangement(in.diagram, w, max_pos));
  emit(opt, report);
  return kExitOk;
}

int cmd_reps(const Options& opt) {
  const Loaded in = load_diagram(opt);
  const racb::Word w = racb::parse_word(in.diagram, opt.word);
  const auto reps = racb::enumerate_reps(in.diagram, w);
  json words = json::array();
  for (const racb::Word& rep : reps) words.push_back(racb::format_word(in.diagram, rep));
  emit(opt, json{{"command", "reps"},
                 {"diagram_hash", in.hash},
                 {"word", opt.word},
                 {"count", reps.size()},
                 {"reps", words}});
  return kExitOk;
}

int cmd_poset(const Options& opt) {
  const Loaded in = load_diagram(opt);
  const racb::Word w = racb::parse_word(in.diagram, opt.word);
  const racb::WordPoset poset = racb::word_poset(in.diagram, w);
  json relations = json::array();
  for (std::size_t i = 1; i <= poset.size(); ++i)
    for (std::size_t j = i + 1; j <= poset.size(); ++j)
      if (poset.precedes(i, j)) relations.push_back({i, j});
  emit(opt, json{{"command", "poset"},
                 {"diagram_hash", in.hash},
                 {"word", opt.word},
                 {"relations", relations}});
  return kExitOk;
}

int cmd_dn(const Options& opt) {
  const Loaded in = load_diagram(opt);
  const racb::DnResult res =
      racb::d_of(in.diagram, opt.n, cap_or(opt, racb::kDefaultSearchCap));
  emit(opt, json{{"command", "dn"},
                 {"diagram_hash", in.hash},
                 {"n", opt.n},
                 {"d", res.d},
                 {"checked_up_to_length", res.checked_up_to_length}});
  return kExitOk;
}

int cmd_fb(const Options& opt) {
  const Loaded in = load_diagram(opt);
  const racb::ChainSearchResult res =
      racb::max_bounded_chain_sequence(in.diagram, opt.b, cap_or(opt, racb::kDefaultSearchCap));
  std::string witness;
  for (std::size_t i = 0; i < res.witness.steps.size(); ++i) {
    if (i) witness += ' ';
    witness += in.diagram.generator_name(res.witness.steps[i]);
  }
  emit(opt, json{{"command", "fb"},
                 {"diagram_hash", in.hash},
                 {"b", opt.b},
                 {"f", res.length},
                 {"witness", witness}});
  return kExitOk;
}

int cmd_kw(const Options& opt) {
  const Loaded in = load_diagram(opt);
  const racb::GroupElement g = racb::reduce(in.diagram, racb::parse_word(in.diagram, opt.word));
  const int k = racb::k_of(in.diagram, g, cap_or(opt, racb::kDefaultSearchCap));
  emit(opt, json{{"command", "kw"},
                 {"diagram_hash", in.hash},
                 {"word", racb::format_word(in.diagram, g.normal)},
                 {"F", racb::firmness(in.diagram, g)},
                 {"k", k}});
  return kExitOk;
}

int cmd_ball(const Options& opt) {
  const Loaded in = load_diagram(opt);
  const racb::Chamber c0 = racb::parse_chamber(in.diagram, opt.center);
  const auto chambers = racb::ball_map(in.diagram, c0, opt.radius,
                                       cap_or(opt, racb::kDefaultChamberCap));
  if (opt.format == "dot") {
    std::ostringstream dot;
    dot << "graph ball {\n";
    for (const auto& [c, dist] : chambers)
      dot << "  \"" << racb::format_chamber(in.diagram, c) << "\";\n";
    for (auto it = chambers.begin(); it != chambers.end(); ++it)
      for (auto jt = std::next(it); jt != chambers.end(); ++jt)
        if (auto s = racb::adjacency(in.diagram, it->first, jt->first))
          dot << "  \"" << racb::format_chamber(in.diagram, it->first) << "\" -- \""
              << racb::format_chamber(in.diagram, jt->first) << "\" [label=\""
              << in.diagram.generator_name(*s) << "\"];\n";
    dot << "}\n";
    emit_raw(opt, dot.str());
    return kExitOk;
  }
  if (opt.format == "csv" || opt.format == "text") {
    std::ostringstream table;
    const char sep = opt.format == "csv" ? ',' : '\t';
    table << "chamber" << sep << "distance\n";
    for (const auto& [c, dist] : chambers)
      table << '"' << racb::format_chamber(in.diagram, c) << '"' << sep << dist << "\n";
    emit_raw(opt, table.str());
    return kExitOk;
  }
  json list = json::array();
  for (const auto& [c, dist] : chambers)
    list.push_back({{"chamber", racb::format_chamber(in.diagram, c)}, {"distance", dist}});
  emit(opt, json{{"command", "ball"},
                 {"diagram_hash", in.hash},
                 {"center", opt.center},
                 {"radius", opt.radius},
                 {"count", chambers.size()},
                 {"chambers", list}});
  return kExitOk;
}

int cmd_flex(const Options& opt) {
  const Loaded in = load_diagram(opt);
  const racb::Chamber c0 = racb::parse_chamber(in.diagram, opt.center);
  const auto flex = racb::flex_set(in.diagram, c0, opt.n, opt.radius,
                                   cap_or(opt, racb::kDefaultChamberCap));
  if (opt.format == "csv" || opt.format == "text") {
    std::ostringstream table;
    table << "chamber\n";
    for (const racb::Chamber& c : flex)
      table << '"' << racb::format_chamber(in.diagram, c) << "\"\n";
    emit_raw(opt, table.str());
    return kExitOk;
  }
  emit(opt, json{{"command", "flex"},
                 {"diagram_hash", in.hash},
                 {"center", opt.center},
                 {"n", opt.n},
                 {"radius", opt.radius},
                 {"size", flex.size()},
                 {"chambers", chamber_list(in.diagram, flex)}});
  return kExitOk;
}

int cmd_verify_flex(const Options& opt) {
  const Loaded in = load_diagram(opt);
  const racb::Chamber c0 = racb::parse_chamber(in.diagram, opt.center);
  const racb::FlexReport res = racb::verify_flex_theorem(
      in.diagram, c0, opt.n, opt.radius, cap_or(opt, racb::kDefaultChamberCap));
  json report{{"command", "verify-flex"},
              {"diagram_hash", in.hash},
              {"center", opt.center},
              {"n", opt.n},
              {"radius", opt.radius},
              {"equal", res.equal},
              {"flex_size", res.flex_size},
              {"closure_size", res.closure_size},
              {"max_distance", res.max_distance},
              {"d_of_n", res.d_of_n}};
  if (!res.equal) {
    report["only_in_flex"] = chamber_list(in.diagram, res.only_in_flex);
    report["only_in_closure"] = chamber_list(in.diagram, res.only_in_closure);
  }
  emit(opt, report);
  return res.equal ? kExitOk : kExitFalsified;
}

int cmd_fixedpoint(const Options& opt) {
  const Loaded in = load_diagram(opt);
  const racb::Chamber c0 = racb::parse_chamber(in.diagram, opt.center);
  const racb::FixedPointReport res = racb::verify_fixed_point_theorem(
      in.diagram, c0, opt.n, opt.radius, cap_or(opt, racb::kDefaultChamberCap), opt.threads);
  json witnesses = json::array();
  for (const racb::MovingWitness& w : res.witnesses) {
    json entry{{"chamber", racb::format_chamber(in.diagram, w.chamber)},
               {"moved", w.moved},
               {"applicable", w.applicable}};
    if (w.moved) {
      entry["firm_on_gallery"] = racb::format_chamber(in.diagram, w.firm_on_gallery);
      entry["panel_base"] = racb::format_chamber(in.diagram, w.panel_base);
      entry["panel_color"] = in.diagram.generator_name(w.gen);
    }
    witnesses.push_back(std::move(entry));
  }
  emit(opt, json{{"command", "fixedpoint"},
                 {"diagram_hash", in.hash},
                 {"center", opt.center},
                 {"n", opt.n},
                 {"radius", opt.radius},
                 {"generator_count", res.generator_count},
                 {"fixed_size", res.fixed_size},
                 {"flex_size", res.flex_size},
                 {"superset_ok", res.superset_ok},
                 {"subset_ok", res.subset_ok},
                 {"all_applicable", res.all_applicable},
                 {"equal", res.equal},
                 {"passed", res.passed()},
                 {"witnesses", witnesses}});
  return res.passed() ? kExitOk : kExitFalsified;
}

// Sweeps every on-apartment panel with gate distance in (n, radius] and runs
// the far-wing fixator check with r = n against each.
int cmd_far_wing(const Options& opt) {
  const Loaded in = load_diagram(opt);
  const racb::Chamber c0 = racb::parse_chamber(in.diagram, opt.center);
  const std::size_t cap = cap_or(opt, racb::kDefaultChamberCap);
  const int r = opt.n;
  bool all_ok = true;
  json panels = json::array();
  for (const auto& [c, dist] : racb::ball_map(in.diagram, c0, opt.radius, cap)) {
    bool on_apartment = true;
    for (const racb::Syllable& s : c.syllables) on_apartment &= s.val == 1;
    if (!on_apartment || dist <= r) continue;
    for (int s = 0; s < in.diagram.rank(); ++s) {
      if (!racb::wing_contains(in.diagram, c, s, c0)) continue;  // c must be the gate
      const bool ok = racb::check_far_wing_fixator(in.diagram, c0, r, c, s, cap);
      all_ok = all_ok && ok;
      panels.push_back({{"gate", racb::format_chamber(in.diagram, c)},
                        {"color", in.diagram.generator_name(s)},
                        {"distance", dist},
                        {"fixes_ball", ok}});
    }
  }
  emit(opt, json{{"command", "far-wing"},
                 {"diagram_hash", in.hash},
                 {"center", opt.center},
                 {"r", r},
                 {"radius", opt.radius},
                 {"panel_count", panels.size()},
                 {"all_fix", all_ok},
                 {"panels", panels}});
  return all_ok ? kExitOk : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact experiments over right-angled Coxeter groups and buildings"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--threads", opt.threads, "worker thread bound")->capture_default_str();

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--diagram", opt.diagram_path, "diagram JSON file")->required();
    cmd->add_option("--cap", opt.cap, "search budget override");
    cmd->add_option("--format", opt.format, "json|dot|csv|text")
        ->check(CLI::IsMember({"json", "dot", "csv", "text"}));
    cmd->add_option("--report", opt.report_path, "also write the report here");
    cmd->add_option("--threads", opt.threads, "worker thread bound");
    return cmd;
  };

  auto* firmness = add_common(app.add_subcommand("firmness", "firmness and poset of a word"));
  firmness->add_option("--word", opt.word, "space-separated generators")->required();
  auto* reps = add_common(app.add_subcommand("reps", "all reduced representations"));
  reps->add_option("--word", opt.word)->required();
  auto* poset = add_common(app.add_subcommand("poset", "dependence order of a reduced word"));
  poset->add_option("--word", opt.word)->required();
  auto* dn = add_common(app.add_subcommand("dn", "length threshold d(n)"));
  dn->add_option("--n", opt.n)->required();
  auto* fb = add_common(app.add_subcommand("fb", "longest chain-bounded increasing sequence"));
  fb->add_option("--b", opt.b)->required();
  auto* kw = add_common(app.add_subcommand("kw", "firmness stall bound k(w)"));
  kw->add_option("--word", opt.word)->required();
  auto* ball = add_common(app.add_subcommand("ball", "chambers within a radius"));
  ball->add_option("--center", opt.center);
  ball->add_option("--radius", opt.radius)->required();
  auto* flex = add_common(app.add_subcommand("flex", "n-flexible chambers"));
  flex->add_option("--center", opt.center);
  flex->add_option("--n", opt.n)->required();
  flex->add_option("--radius", opt.radius)->required();
  auto* vflex = add_common(app.add_subcommand("verify-flex", "square closure vs flexible set"));
  vflex->add_option("--center", opt.center);
  vflex->add_option("--n", opt.n)->required();
  vflex->add_option("--radius", opt.radius)->required();
  auto* fixed = add_common(app.add_subcommand("fixedpoint", "ball fixator fixed-point check"));
  fixed->add_option("--center", opt.center);
  fixed->add_option("--n", opt.n)->required();
  fixed->add_option("--radius", opt.radius)->required();
  auto* far = add_common(app.add_subcommand("far-wing", "far panel wing fixator check"));
  far->add_option("--center", opt.center);
  far->add_option("--n", opt.n, "ball radius r that must stay fixed")->required();
  far->add_option("--radius", opt.radius, "sweep panels out to this distance")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (opt.n < 0 || opt.radius < 0 || opt.b < 0 || opt.threads < 1)
      throw std::invalid_argument("numeric parameters must be non-negative");
    if (firmness->parsed()) return cmd_firmness(opt);
    if (reps->parsed()) return cmd_reps(opt);
    if (poset->parsed()) return cmd_poset(opt);
    if (dn->parsed()) return cmd_dn(opt);
    if (fb->parsed()) return cmd_fb(opt);
    if (kw->parsed()) return cmd_kw(opt);
    if (ball->parsed()) return cmd_ball(opt);
    if (flex->parsed()) return cmd_flex(opt);
    if (vflex->parsed()) return cmd_verify_flex(opt);
    if (fixed->parsed()) return cmd_fixedpoint(opt);
    if (far->parsed()) return cmd_far_wing(opt);
    std::cerr << "racb: no subcommand\n";
    return kExitUsage;
  } catch (const racb::cap_exceeded& e) {
    std::cerr << "racb: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "racb: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "racb: internal consistency failure: " << e.what() << "\n";
    return kExitFalsified;
  }
  return kExitOk;
}
