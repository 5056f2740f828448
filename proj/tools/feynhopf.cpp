#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "feynhopf/amplitudes.hpp"
#include "feynhopf/error.hpp"
#include "feynhopf/graph.hpp"
#include "feynhopf/graph_io.hpp"
#include "feynhopf/hopf.hpp"
#include "feynhopf/laurent_json.hpp"
#include "feynhopf/renorm.hpp"
#include "feynhopf/rg.hpp"
#include "feynhopf/wick.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace feynhopf;

namespace {

struct Options {
  int n = 0;
  bool list = false;
  int externals = 0;
  std::string vertices;
  bool exclude_vacuum = false;
  std::string dot_dir;
  std::string model;
  int order = 2;
  bool oracle = false;
  int max_slots = 14;
  bool table = false;
  std::string nesting;
  std::string character;
  std::string monomial;
  int truncation = 0;
  int pole_bound = 0;
  int t_degree = 8;
};

json read_json_file(const std::string &path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open \"" + path + "\"");
  return json::parse(in);
}

void print(const json &j) { std::cout << j.dump(2) << "\n"; }

std::map<int, int> parse_profile(const std::string &text) {
  std::map<int, int> profile;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw CLI::ValidationError("--vertices", "expected valence:count, got \"" + item + "\"");
    try {
      const int m = std::stoi(item.substr(0, colon)), count = std::stoi(item.substr(colon + 1));
      if (count < 0) throw CLI::ValidationError("--vertices", "negative count in \"" + item + "\"");
      if (count > 0) profile[m] += count;
    } catch (const std::logic_error &) {
      throw CLI::ValidationError("--vertices", "expected valence:count, got \"" + item + "\"");
    }
  }
  return profile;
}

std::string degree_key(const amp::Multidegree &n) { return amp::multidegree_str(n); }

json degree_json(const amp::Multidegree &n) {
  json j = json::object();
  for (const auto &[m, k] : n) j[std::to_string(m)] = k;
  return j;
}

json axioms_json(const hopf::AxiomReport &r) {
  auto v = [](bool ok) { return ok ? "pass" : "fail"; };
  return json{{"coassociative", v(r.coassociative)},   {"counit_left", v(r.counit_left)},
              {"counit_right", v(r.counit_right)},     {"antipode_left", v(r.antipode_left)},
              {"antipode_right", v(r.antipode_right)}, {"geometric_left", v(r.geometric_left)},
              {"geometric_right", v(r.geometric_right)},
              {"antipodes_agree", v(r.antipodes_agree)},
              {"graded", v(r.graded)},                 {"reduced_shape", v(r.reduced_shape)},
              {"involution", v(r.involution)},         {"terminates", v(r.terminates)}};
}

/// Applies --truncation/--pole-bound overrides to a character.
renorm::RCharacter load_character(const Options &o) {
  renorm::RCharacter x = renorm::character_from_json(read_json_file(o.character));
  if (o.truncation > 0) x.truncation = std::min(x.truncation, o.truncation);
  if (o.pole_bound > 0) x.pole_bound = o.pole_bound;
  for (auto &[id, s] : x.values) {
    auto terms = s.truncated(x.truncation).terms();
    for (const auto &[k, c] : terms)
      if (k < -x.pole_bound)
        throw PoleOverflow("value of \"" + id + "\" has a pole of order " +
                           std::to_string(-k) + " beyond the pole bound " +
                           std::to_string(x.pole_bound));
    s = RSeries(std::move(terms), x.truncation, x.pole_bound);
  }
  return x;
}

int run_moments(const Options &o) {
  std::cout << wick::moment_1d(o.n).str() << "\n";
  return 0;
}

int run_pairings(const Options &o) {
  json out = {{"n", o.n}, {"count", wick::pairing_count(o.n).get_str()}};
  if (o.list) {
    json all = json::array();
    for (const auto &p : wick::enumerate_pairings(o.n)) {
      json pairs = json::array();
      for (auto [a, b] : p) pairs.push_back({a, b});
      all.push_back(std::move(pairs));
    }
    out["pairings"] = std::move(all);
  }
  print(out);
  return 0;
}

int run_graphs(const Options &o) {
  const auto profile = parse_profile(o.vertices);
  const auto classes = graph::enumerate_graphs(o.externals, profile, !o.exclude_vacuum);
  if (!o.dot_dir.empty()) fs::create_directories(o.dot_dir);
  json list = json::array();
  int index = 0;
  for (const auto &c : classes) {
    ++index;
    const auto grades = graph::gradings(c.graph);
    json entry = {{"index", index},
                  {"key", c.key},
                  {"automorphisms", c.automorphisms.get_str()},
                  {"matchings", c.matchings.get_str()},
                  {"connected", c.graph.is_connected()},
                  {"one_particle_irreducible", graph::is_one_particle_irreducible(c.graph)},
                  {"loops", grades.loops},
                  {"graph", graph::to_json(c.graph)}};
    if (!o.dot_dir.empty()) {
      std::ostringstream name;
      name << "graph_" << std::setw(3) << std::setfill('0') << index;
      std::ofstream(fs::path(o.dot_dir) / (name.str() + ".dot"))
          << graph::to_dot(c.graph, name.str());
      entry["dot"] = name.str() + ".dot";
    }
    list.push_back(std::move(entry));
  }
  json prof = json::object();
  for (const auto &[m, k] : profile) prof[std::to_string(m)] = k;
  print({{"externals", o.externals},
         {"vertices", prof},
         {"exclude_vacuum", o.exclude_vacuum},
         {"relabelling_group_order", graph::relabelling_group_order(profile).get_str()},
         {"classes", std::move(list)}});
  return 0;
}

int run_correlator(const Options &o) {
  std::vector<amp::IngestWarning> warnings;
  const auto model = amp::model_from_json(read_json_file(o.model), &warnings);
  for (const auto &w : warnings)
    std::cerr << json{{"warning", {{"pointer", w.pointer}, {"message", w.message}}}}.dump()
              << "\n";
  const auto series = amp::correlator_series(model, o.order);
  if (o.table) {
    std::cout << "multidegree\tcoefficient" << (o.oracle ? "\toracle" : "") << "\n";
    for (const auto &c : series) {
      std::cout << degree_key(c.degree) << "\t" << c.value.str();
      if (o.oracle) std::cout << "\t" << amp::oracle_coefficient(model, c.degree, o.max_slots).str();
      std::cout << "\n";
    }
    return 0;
  }
  json rows = json::array();
  bool agree = true;
  for (const auto &c : series) {
    json row = {{"multidegree", degree_json(c.degree)}, {"value", c.value.str()}};
    if (o.oracle) {
      const Rational oracle = amp::oracle_coefficient(model, c.degree, o.max_slots);
      row["oracle"] = oracle.str();
      row["agrees"] = oracle == c.value;
      agree &= oracle == c.value;
    }
    rows.push_back(std::move(row));
  }
  json out = {{"externals", model.external.size()},
              {"max_order", o.order},
              {"coefficients", std::move(rows)}};
  json warn = json::array();
  for (const auto &w : warnings) warn.push_back({{"pointer", w.pointer}, {"message", w.message}});
  out["warnings"] = std::move(warn);
  if (o.oracle) out["oracle_agrees"] = agree;
  print(out);
  return 0;
}

json hopf_entry(const hopf::HopfAlgebra &h, const hopf::Monomial &m) {
  const hopf::Element x(m);
  return json{{"degree", h.degree(m)},
              {"coproduct", hopf::tensor_to_json(h.coproduct(m))},
              {"reduced_coproduct", hopf::tensor_to_json(h.reduced_coproduct(m))},
              {"antipode", hopf::element_to_json(h.antipode_recursive(m))},
              {"axioms", axioms_json(hopf::check_axioms(h, x))}};
}

int run_hopf(const Options &o) {
  const hopf::HopfAlgebra h(hopf::nesting_from_json(read_json_file(o.nesting)));
  json out = json::object();
  if (!o.monomial.empty()) {
    std::vector<std::string> ids;
    std::stringstream ss(o.monomial);
    std::string id;
    while (std::getline(ss, id, ','))
      if (!id.empty()) {
        if (!h.spec().contains(id)) throw DomainError("unknown generator \"" + id + "\"");
        ids.push_back(id);
      }
    const auto m = hopf::make_monomial(std::move(ids));
    out["monomial"] = m;
    out["result"] = hopf_entry(h, m);
  } else {
    json gens = json::object();
    for (const auto &g : h.spec().generators()) gens[g.id] = hopf_entry(h, {g.id});
    out["generators"] = std::move(gens);
  }
  print(out);
  return 0;
}

int run_renorm(const Options &o) {
  const auto spec = hopf::nesting_from_json(read_json_file(o.nesting));
  const auto f = load_character(o);
  renorm::require_complete(f, spec);
  const hopf::HopfAlgebra h(spec);
  const auto bp = renorm::bogoliubov(h, f);
  std::vector<std::pair<hopf::Monomial, hopf::Monomial>> pairs;
  const auto &ids = spec.by_degree();
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i; j < ids.size(); ++j)
      if (spec.degree(ids[i]) + spec.degree(ids[j]) <= f.pole_bound)
        pairs.push_back({{ids[i]}, {ids[j]}});
  print(renorm::report_to_json(bp, renorm::check_bp(h, f, bp, pairs)));
  return 0;
}

int run_rg(const Options &o) {
  const auto spec = hopf::nesting_from_json(read_json_file(o.nesting));
  const auto f = load_character(o);
  renorm::require_complete(f, spec);
  const hopf::HopfAlgebra h(spec);
  print(rg::report_to_json(rg::analyze(h, f), o.t_degree));
  return 0;
}

int report_error(const std::string &kind, const std::string &message,
                 const std::string *pointer = nullptr) {
  json e = {{"kind", kind}, {"message", message}};
  if (pointer) e["pointer"] = *pointer;
  std::cerr << json{{"error", e}}.dump() << "\n";
  return 1;
}

const CLI::Validator kExistingOrStdin(
    [](std::string &path) -> std::string {
      if (path == "-" || fs::is_regular_file(path)) return {};
      return "file does not exist: " + path;
    },
    "FILE|-");

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact perturbative expansion and Hopf-algebraic renormalization toolkit"};
  app.require_subcommand(1);
  Options o;

  auto *moments = app.add_subcommand("moments", "<x^N> of the standard 1-d Gaussian");
  moments->add_option("--n", o.n, "Moment order N")->required()->check(CLI::NonNegativeNumber);

  auto *pairings = app.add_subcommand("pairings", "Perfect matchings of N slots");
  pairings->add_option("--n", o.n, "Number of slots")->required()->check(CLI::NonNegativeNumber);
  pairings->add_flag("--list", o.list, "List every pairing");

  auto *graphs = app.add_subcommand("graphs", "Isomorphism classes of Feynman graphs");
  graphs->add_option("--external", o.externals, "Number of external vertices")
      ->check(CLI::NonNegativeNumber);
  graphs->add_option("--vertices", o.vertices, "Internal valences, e.g. 3:2,4:1")->required();
  graphs->add_flag("--exclude-vacuum", o.exclude_vacuum, "Drop graphs with vacuum components");
  graphs->add_option("--dot", o.dot_dir, "Write one DOT file per class into this directory");

  auto *correlator = app.add_subcommand("correlator", "Perturbative correlator coefficients");
  correlator->add_option("--model", o.model, "Model JSON")->required()->check(kExistingOrStdin);
  correlator->add_option("--order", o.order, "Maximum total vertex count")
      ->check(CLI::NonNegativeNumber);
  correlator->add_flag("--oracle", o.oracle, "Compare against the direct Wick expansion");
  correlator->add_option("--max-slots", o.max_slots, "Slot cap for the oracle")
      ->check(CLI::PositiveNumber);
  correlator->add_flag("--table", o.table, "Print a text table instead of JSON");

  auto *hopf_cmd = app.add_subcommand("hopf", "Coproduct, antipode and axiom checks");
  hopf_cmd->add_option("--nesting", o.nesting, "NestingSpec JSON")
      ->required()
      ->check(kExistingOrStdin);
  hopf_cmd->add_option("--monomial", o.monomial, "Comma-separated generator ids");

  for (auto *cmd : {app.add_subcommand("renorm", "Bogoliubov-Parasiuk renormalization"),
                    app.add_subcommand("rg", "Renormalization group and beta function")}) {
    cmd->add_option("--character", o.character, "Character JSON, or - for stdin")
        ->required()
        ->check(kExistingOrStdin);
    cmd->add_option("--nesting", o.nesting, "NestingSpec JSON")
        ->required()
        ->check(kExistingOrStdin);
    cmd->add_option("--truncation", o.truncation, "Truncation order K (lowers the input's)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--pole-bound", o.pole_bound, "Pole bound P")->check(CLI::PositiveNumber);
    if (cmd->get_name() == "rg")
      cmd->add_option("--t-degree", o.t_degree, "Highest power of t to report")
          ->check(CLI::NonNegativeNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "moments") return run_moments(o);
    if (command == "pairings") return run_pairings(o);
    if (command == "graphs") return run_graphs(o);
    if (command == "correlator") return run_correlator(o);
    if (command == "hopf") return run_hopf(o);
    if (command == "renorm") return run_renorm(o);
    if (command == "rg") return run_rg(o);
  } catch (const CLI::ValidationError &e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ValidationError &e) {
    return report_error(e.kind(), e.what(), &e.pointer());
  } catch (const Error &e) {
    return report_error(e.kind(), e.what());
  } catch (const json::parse_error &e) {
    return report_error("parse_error", e.what());
  } catch (const json::exception &e) {
    return report_error("validation_error", e.what());
  }
  return 2;
}
