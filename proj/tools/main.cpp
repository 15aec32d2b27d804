// invarr: build finite reflection groups, scan their elements, draw Bruhat
// graphs, and verify the structural theorems exhaustively.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "invarr/io.hpp"
#include "invarr/scan.hpp"

namespace {

using namespace invarr;

struct GroupArgs {
  std::string type;
  int rank = 0;
  int m = 0;
  std::size_t cap = CoxeterSystem::kDefaultCap;
};

void add_group_options(CLI::App* cmd, GroupArgs& g) {
  cmd->add_option("--type", g.type,
                  "Group type: A, B, D, E6, E7, E8, F4, G2, H3, H4, I2");
  cmd->add_option("--rank", g.rank, "Rank (types A, B, D)");
  cmd->add_option("--m", g.m, "Dihedral order (type I2)");
  cmd->add_option("--cap", g.cap, "Group order cap")->capture_default_str();
}

CoxeterDatum datum_from_args(const GroupArgs& g) {
  if (g.type.empty()) throw Error("--type is required");
  auto kind = kind_from_string(g.type);
  if (!kind) throw Error("unknown group type: " + g.type);
  if (*kind == Kind::I2) return CoxeterDatum::dihedral(g.m);
  int rank = g.rank;
  switch (*kind) {
    case Kind::E6: rank = 6; break;
    case Kind::E7: rank = 7; break;
    case Kind::E8: rank = 8; break;
    case Kind::F4: rank = 4; break;
    case Kind::G2: rank = 2; break;
    case Kind::H3: rank = 3; break;
    case Kind::H4: rank = 4; break;
    default: break;
  }
  return CoxeterDatum::of(*kind, rank);
}

struct ElementArgs {
  std::string perm;
  std::string word;
  long long index = -1;
};

void add_element_options(CLI::App* cmd, ElementArgs& e) {
  cmd->add_option("--perm", e.perm, "One-line notation (type A only)");
  cmd->add_option("--word", e.word, "Word in 1-based generators, e.g. \"1 2 1\"");
  cmd->add_option("--index", e.index, "Canonical element index");
}

Element resolve_element(const CoxeterSystem& sys, const ElementArgs& e) {
  if (!e.perm.empty()) return realize(sys, Permutation::parse(e.perm));
  if (e.index >= 0) {
    if (static_cast<std::size_t>(e.index) >= sys.order())
      throw Error("element index out of range");
    return sys.element(static_cast<ElementId>(e.index));
  }
  if (!e.word.empty()) {
    std::istringstream in(e.word);
    std::vector<int> word;
    int g;
    while (in >> g) word.push_back(g - 1);
    return sys.evaluate_word(word);
  }
  throw Error("specify the element with --perm, --word or --index");
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + path);
  out << payload;
}

std::string word_str(const std::vector<int>& word) {
  std::string out;
  for (int g : word) {
    if (!out.empty()) out += ' ';
    out += std::to_string(g + 1);
  }
  return out.empty() ? "e" : out;
}

int run_scan(const GroupArgs& g, const std::string& out_path, int jobs,
             bool timings) {
  CoxeterSystem sys = CoxeterSystem::build(datum_from_args(g), g.cap);
  ScanOptions opts;
  opts.jobs = jobs;
  opts.timings = timings;
  write_output(out_path, scan_jsonl(scan_group(sys, opts), timings));
  return 0;
}

int run_element(const GroupArgs& g, const ElementArgs& e, bool show_rhombi,
                bool show_phi, bool as_json) {
  CoxeterSystem sys = CoxeterSystem::build(datum_from_args(g), g.cap);
  Element w = resolve_element(sys, e);
  ElementId id = sys.id_of(w);
  ScanRecord rec = scan_element(sys, id);
  InversionArrangement arr = inversion_arrangement(sys, w);

  nlohmann::ordered_json j = to_json(rec);
  j["word"] = word_str(arr.word);
  if (show_rhombi) {
    auto rhombi = broken_rhombi(sys, w);
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& r : rhombi) {
      list.push_back({element_form(sys, sys.element(r.x)),
                      element_form(sys, sys.element(r.y)),
                      element_form(sys, sys.element(r.z))});
    }
    j["broken_rhombi"] = std::move(list);
  }
  if (show_phi) j["phi"] = phi_table_json(phi_map(nbc_sets(arr)));

  if (as_json) {
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << rec.group << " element " << rec.form << " (index " << rec.index
            << ")\n";
  std::cout << "  length " << rec.length << ", absolute length "
            << rec.abs_length << ", reduced word [" << j["word"].get<std::string>()
            << "]\n";
  std::cout << "  |[e,w]| = " << rec.interval_size << ", #NBC = " << rec.nbc_count
            << ", regions = " << rec.region_count << "\n";
  std::cout << "  star " << (rec.star ? "yes" : "no") << ", distance condition "
            << (rec.distance_cond ? "yes" : "no") << ", bg regular "
            << (rec.regular_bg ? "yes" : "no") << ", broken rhombi "
            << (rec.has_rhombus ? "yes" : "no") << "\n";
  if (rec.right_hull_prop)
    std::cout << "  right hull property " << (*rec.right_hull_prop ? "yes" : "no")
              << ", avoids 4231/35142/42513/351624 "
              << (*rec.avoids_patterns ? "yes" : "no") << "\n";
  if (show_rhombi) {
    std::cout << "  broken rhombi:\n";
    for (const auto& r : j["broken_rhombi"])
      std::cout << "    (" << r[0].get<std::string>() << ", "
                << r[1].get<std::string>() << ", " << r[2].get<std::string>()
                << ")\n";
  }
  if (show_phi) {
    std::cout << "  phi table (word [" << j["word"].get<std::string>() << "]):\n";
    for (const auto& row : j["phi"]["rows"]) {
      std::cout << "    {";
      bool first = true;
      for (const auto& p : row["positions"]) {
        if (!first) std::cout << ",";
        std::cout << p.get<int>();
        first = false;
      }
      std::cout << "} -> " << row["image"].get<std::string>() << "\n";
    }
  }
  return 0;
}

int run_graph(const GroupArgs& g, const ElementArgs& e,
              const std::string& out_path) {
  CoxeterSystem sys = CoxeterSystem::build(datum_from_args(g), g.cap);
  Element w = resolve_element(sys, e);
  write_output(out_path, to_dot(bruhat_graph(sys, w)));
  return 0;
}

int run_verify(const GroupArgs& g, std::vector<std::string> suites, int n,
               const std::string& strategy_name, std::uint64_t seed) {
  static const std::vector<std::string> group_suites = {
      "aprime", "th-main", "carter", "rhombi", "corollary", "path", "oracles"};
  if (suites.empty()) suites = {"all"};
  if (suites.size() == 1 && suites[0] == "all") {
    suites = group_suites;
    if (n > 0) suites.push_back("collection");
  }

  WordStrategy strategy = WordStrategy::Canonical;
  if (strategy_name == "all")
    strategy = WordStrategy::All;
  else if (strategy_name == "sample")
    strategy = WordStrategy::Sample;
  else if (strategy_name != "canonical")
    throw Error("unknown word strategy: " + strategy_name);

  std::optional<CoxeterSystem> sys;
  auto group = [&]() -> const CoxeterSystem& {
    if (!sys) sys = CoxeterSystem::build(datum_from_args(g), g.cap);
    return *sys;
  };

  bool ok = true;
  for (const auto& name : suites) {
    SuiteResult r;
    if (name == "aprime")
      r = verify_aprime(group());
    else if (name == "th-main")
      r = verify_th_main(group());
    else if (name == "carter")
      r = verify_carter(group());
    else if (name == "rhombi")
      r = verify_rhombi(group());
    else if (name == "corollary")
      r = verify_corollary(group());
    else if (name == "path")
      r = verify_path(group());
    else if (name == "oracles")
      r = verify_oracles(group(), strategy, seed);
    else if (name == "collection")
      r = verify_collection(n > 0 ? n : 5, g.cap);
    else
      throw Error("unknown suite: " + name);
    std::cout << (r.pass() ? "PASS " : "FAIL ") << r.summary() << "\n";
    ok = ok && r.pass();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Bruhat graphs, inversion arrangements and NBC sets "
               "for finite reflection groups"};
  app.require_subcommand(1);

  GroupArgs group;
  ElementArgs element;
  std::string out_path = "-";
  int jobs = 1;
  bool timings = false;
  bool show_rhombi = false, show_phi = false, as_json = false;
  std::vector<std::string> suites;
  int collection_n = 0;
  std::string strategy = "canonical";
  std::uint64_t seed = 0;

  CLI::App* scan = app.add_subcommand("scan", "JSON-lines record per element");
  add_group_options(scan, group);
  scan->add_option("--out", out_path, "Output path ('-' for stdout)");
  scan->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  scan->add_flag("--timings", timings, "Include per-element timing_ms");

  CLI::App* elem = app.add_subcommand("element", "Report on one element");
  add_group_options(elem, group);
  add_element_options(elem, element);
  elem->add_flag("--rhombi", show_rhombi, "List broken rhombi");
  elem->add_flag("--phi", show_phi, "Print the phi table");
  elem->add_flag("--json", as_json, "Emit a single JSON object");

  CLI::App* graph = app.add_subcommand("graph", "Bruhat graph as DOT");
  add_group_options(graph, group);
  add_element_options(graph, element);
  graph->add_option("--dot,--out", out_path, "Output path ('-' for stdout)");

  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  add_group_options(verify, group);
  verify->add_option("--suite", suites,
                     "aprime, th-main, carter, rhombi, corollary, path, "
                     "oracles, collection, or all");
  verify->add_option("--n", collection_n, "Symmetric group size for collection");
  verify->add_option("--word-strategy", strategy, "canonical, all or sample")
      ->capture_default_str();
  verify->add_option("--seed", seed, "Seed for sampled reduced words");

  try {
    app.parse(argc, argv);
    if (scan->parsed()) return run_scan(group, out_path, jobs, timings);
    if (elem->parsed())
      return run_element(group, element, show_rhombi, show_phi, as_json);
    if (graph->parsed()) return run_graph(group, element, out_path);
    if (verify->parsed())
      return run_verify(group, suites, collection_n, strategy, seed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
