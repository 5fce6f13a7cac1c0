// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error, 3 timeout.

#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "drgcay/analysis.hpp"
#include "drgcay/canonical.hpp"
#include "drgcay/catalog.hpp"
#include "drgcay/graph6.hpp"
#include "drgcay/metrics.hpp"
#include "drgcay/regular_subgroup.hpp"
#include "drgcay/serialize.hpp"
#include "drgcay/spectral.hpp"
#include "drgcay/structure.hpp"

namespace {

using namespace drgcay;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 3;
constexpr int kMaxSearchOrder = 700;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void report_error(const std::string& message) {
  const bool color = std::getenv("NO_COLOR") == nullptr && isatty(STDERR_FILENO);
  std::cerr << (color ? "\033[31merror:\033[0m " : "error: ") << message << '\n';
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

// Graph source shared by analyze, is-cayley and decompose: --named, or a
// positional graph6 string, file path, or "-" for stdin.
struct GraphInput {
  std::string input;
  std::string named;

  void attach(CLI::App* cmd) {
    cmd->add_option("input", input, "graph6 string, file containing one, or - for stdin");
    cmd->add_option("--named", named, "named graph expression, e.g. line(heawood)");
  }

  Graph load() const {
    if (!named.empty() && !input.empty()) throw UsageError("give either INPUT or --named, not both");
    if (!named.empty()) return named_graph(named);
    if (input.empty()) throw UsageError("no graph given (INPUT or --named)");
    std::string text = input;
    if (input == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else if (std::filesystem::is_regular_file(input)) {
      std::ifstream in(input);
      text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    if (text.empty() || text == "\n") throw ParseError("empty graph6 input", 0);
    return graph6_decode(text);
  }
};

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json krausz_summary(const Graph& g) {
  if (g.order() < 4 || !is_connected(g)) return Json{{"status", "undecided"}, {"reason", "needs a connected graph on >= 4 vertices"}};
  const auto k = krausz(g);
  if (!k) return Json{{"status", "not_line_graph"}};
  Json out = to_json(*k);
  out["status"] = "line_graph";
  return out;
}

int cmd_construct(const std::string& group, const std::string& set, bool invclose, const std::string& named,
                  const std::string& out) {
  Graph g;
  if (!named.empty()) {
    if (!group.empty() || !set.empty()) throw UsageError("--named excludes --group/--set");
    g = named_graph(named);
  } else {
    if (group.empty()) throw UsageError("need --group with --set, or --named");
    const FiniteGroup fg = parse_group_spec(group);
    std::vector<FiniteGroup::Element> elems;
    for (const auto& w : parse_words(set)) elems.push_back(evaluate_word(fg, w));
    const ConnectionSet s = invclose ? ConnectionSet::inverse_closure(fg, elems) : ConnectionSet(fg, elems);
    g = cayley_graph(fg, s);
  }
  if (out == "graph6") {
    std::cout << graph6_encode(g) << '\n';
  } else {
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    Json j{{"order", g.order()}, {"size", g.size()}, {"edges", edges}};
    if (!g.labels().empty()) j["labels"] = g.labels();
    print(j);
  }
  return 0;
}

int cmd_analyze(const GraphInput& in, bool clique) {
  const Graph g = in.load();
  if (g.order() == 0) throw ParseError("graph has no vertices", 0);
  Json j;
  j["metrics"] = to_json(metrics(g, clique));
  const auto srg = srg_parameters(g);
  j["srg"] = srg ? to_json(*srg) : Json(nullptr);
  if (is_connected(g)) {
    const auto ia = intersection_array(g);
    j["intersection_array"] = ia ? to_json(*ia) : Json(nullptr);
  } else {
    j["intersection_array"] = nullptr;
  }
  const auto spec = spectrum(g);
  j["spectrum"] = to_json(spec);
  j["least_eigenvalue"] = report_real(spec.least());
  j["line_graph"] = krausz_summary(g);
  print(j);
  return 0;
}

int cmd_is_cayley(const GraphInput& in, double budget_seconds) {
  const Graph g = in.load();
  if (g.order() == 0) throw ParseError("graph has no vertices", 0);
  if (g.order() > kMaxSearchOrder) {
    throw UsageError("refusing " + std::to_string(g.order()) + " vertices: the automorphism search is limited to " +
                     std::to_string(kMaxSearchOrder));
  }
  const auto budget = std::chrono::milliseconds(static_cast<long long>(budget_seconds * 1000));
  const auto aut = automorphism_group(g, {0});
  const auto r = regular_subgroup_search(g, aut, budget);
  Json j{{"order", g.order()}, {"aut_order", aut.order().str()}, {"nodes", r.nodes}};
  switch (r.status) {
    case SearchStatus::found:
      j["status"] = "cayley";
      j["certificate"] = to_json(*r.certificate);
      break;
    case SearchStatus::none:
      j["status"] = "not_cayley";
      j["proof"] = r.shortcut.empty() ? "exhaustive search over regular subgroups of Aut found none" : r.shortcut;
      break;
    case SearchStatus::timeout:
      j["status"] = "timeout";
      break;
  }
  // Also report the abelian-order obstruction when the graph is a line graph
  // of a regular root it applies to.
  if (g.order() >= 4 && is_connected(g)) {
    if (const auto k = krausz(g)) {
      const int v = k->root.order(), m = k->root.size();
      const bool exceptional = (v == 2 && m == 1) || (v == 4 && m == 6);
      if (!exceptional && regular_degree(k->root)) j["obstruction"] = to_json(line_graph_abelian_obstruction(k->root));
    }
  }
  print(j);
  return r.status == SearchStatus::timeout ? kExitTimeout : 0;
}

int cmd_decompose(const GraphInput& in, const std::string& group, const std::string& set, int d) {
  Json j;
  if (!group.empty()) {
    const FiniteGroup fg = parse_group_spec(group);
    std::vector<FiniteGroup::Element> elems;
    for (const auto& w : parse_words(set)) elems.push_back(evaluate_word(fg, w));
    const ConnectionSet s(fg, elems);
    j["connection_structure"] = to_json(connection_structure(fg, s, d));
    const Graph g = cayley_graph(fg, s);
    j["line_graph"] = krausz_summary(g);
  } else {
    const Graph g = in.load();
    j["line_graph"] = krausz_summary(g);
    if (const auto k = g.order() >= 4 && is_connected(g) ? krausz(g) : std::nullopt) {
      j["cliques"] = k->cliques;
    }
  }
  print(j);
  return 0;
}

int cmd_verify_paper(int parallel, const std::string& pattern, bool timing) {
  const auto reports = run_all(parallel, pattern);
  if (reports.empty()) throw UsageError("no case matches '" + pattern + "'");
  Json cases = Json::array();
  int passed = 0, timeouts = 0;
  for (const auto& r : reports) {
    cases.push_back(r.to_json(timing));
    passed += r.pass;
    timeouts += r.timeout;
  }
  const bool all = passed == static_cast<int>(reports.size());
  print(Json{{"cases", cases}, {"pass", all}, {"passed", passed}, {"total", reports.size()}, {"timeouts", timeouts}});
  if (all) return 0;
  return timeouts > 0 && passed + timeouts == static_cast<int>(reports.size()) ? kExitTimeout : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley and distance-regular graph toolkit"};
  app.require_subcommand(1);

  std::string group, set, named, out = "graph6";
  bool invclose = false;
  auto* construct = app.add_subcommand("construct", "build a Cayley or named graph");
  construct->add_option("--group", group, "group spec, e.g. SD(7,3,2)");
  construct->add_option("--set", set, "connection set words, e.g. \"b, a^-1 b a\"");
  construct->add_flag("--invclose", invclose, "close the set under inversion");
  construct->add_option("--named", named, "named graph expression");
  construct->add_option("--out", out, "output format")->check(CLI::IsMember({"graph6", "json"}));

  GraphInput analyze_in;
  bool clique = false;
  auto* analyze = app.add_subcommand("analyze", "metrics, spectrum, SRG/DRG parameters, line-graph structure");
  analyze_in.attach(analyze);
  analyze->add_flag("--clique", clique, "compute the clique number (n <= 100)");

  GraphInput cayley_in;
  double budget = 60;
  auto* is_cayley = app.add_subcommand("is-cayley", "decide whether a graph is a Cayley graph");
  cayley_in.attach(is_cayley);
  is_cayley->add_option("--budget", budget, "search budget in seconds")->check(CLI::PositiveNumber);

  GraphInput decompose_in;
  std::string dgroup, dset;
  int d = 2;
  auto* decompose = app.add_subcommand("decompose", "Krausz decomposition, or connection-set structure");
  decompose_in.attach(decompose);
  decompose->add_option("--group", dgroup, "group spec for the connection-set report");
  decompose->add_option("--set", dset, "connection set words");
  decompose->add_option("-d", d, "diameter for the order-2d conditions")->check(CLI::Range(2, 1000));

  int parallel = 1;
  std::string pattern;
  bool no_timing = false;
  auto* verify = app.add_subcommand("verify-paper", "run the catalog of reference cases");
  verify->add_option("--parallel", parallel, "worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--case", pattern, "shell glob over case names");
  verify->add_flag("--no-timing", no_timing, "omit runtimes so reports compare byte for byte");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(group, set, invclose, named, out);
    if (*analyze) return cmd_analyze(analyze_in, clique);
    if (*is_cayley) return cmd_is_cayley(cayley_in, budget);
    if (*decompose) {
      if (dgroup.empty() != dset.empty()) throw UsageError("--group and --set go together");
      return cmd_decompose(decompose_in, dgroup, dset, d);
    }
    if (*verify) return cmd_verify_paper(parallel, pattern, !no_timing);
  } catch (const ParseError& e) {
    report_error(std::string(e.what()) + " (at offset " + std::to_string(e.position()) + ")");
    return kExitUsage;
  } catch (const UsageError& e) {
    report_error(e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    report_error(e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    report_error(e.what());
    return kExitFailure;
  }
  return kExitUsage;
}
