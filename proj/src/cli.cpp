#include "covenum/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "covenum/capacitated.hpp"
#include "covenum/capacity.hpp"
#include "covenum/connected_ds.hpp"
#include "covenum/connected_vc.hpp"
#include "covenum/errors.hpp"
#include "covenum/graph.hpp"
#include "covenum/hypergraph.hpp"
#include "covenum/min_valid_aug.hpp"
#include "covenum/oracle.hpp"
#include "covenum/properties.hpp"
#include "covenum/reductions.hpp"
#include "covenum/supergraph.hpp"

namespace covenum {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEmpty = 1;  // empty capacitated family, failed verify
constexpr int kExitInput = 2;

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  return in;
}

Graph load_graph(const std::string& path) {
  std::ifstream in = open_file(path);
  return parse_graph(in);
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in = open_file(path);
  return parse_hypergraph(in);
}

void print_set(std::ostream& out, const VertexSet& s) {
  bool first = true;
  for (int v : s) {
    if (!first) out << ' ';
    out << v;
    first = false;
  }
  out << '\n';
  out.flush();
}

void print_stats(std::ostream& out, const DelayStats& st) {
  nlohmann::ordered_json j;
  j["outputs"] = st.outputs;
  j["max_gap"] = st.max_gap;
  j["mean_gap"] = st.mean_gap;
  j["neighborhood_calls"] = st.neighborhood_calls;
  out << j.dump() << '\n';
}

// Per-subcommand option bag; only the fields its flags bind to are used.
struct EnumArgs {
  std::string graph_file;
  std::string mode = "degree";
  std::string capacity_file;
  int capacity_all = -1;
  bool stats = false;
  bool check = false;
  bool emit_assignment = false;
  std::uint64_t max_solutions = 0;

  EnumerateOptions options() const {
    EnumerateOptions opts;
    opts.max_solutions = max_solutions;
    opts.check_integrity = check;
    return opts;
  }
};

AugmentationBudget parse_mode(const std::string& mode) {
  if (mode == "degree") return AugmentationBudget::degree();
  if (mode.rfind("claw:", 0) == 0 || mode.rfind("budget:", 0) == 0) {
    std::string tail = mode.substr(mode.find(':') + 1);
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(tail);
    } catch (const std::exception&) {
      throw input_error("mode parameter '" + tail + "' is not an integer");
    }
    if (mode[0] == 'c') {
      if (value < 2) throw input_error("claw mode needs d >= 2");
      return AugmentationBudget::claw(value);
    }
    if (value < 0) throw input_error("budget mode needs k >= 0");
    return AugmentationBudget::budget(value);
  }
  throw input_error("unknown mode '" + mode +
                    "' (expected degree, claw:<d>, budget:<k> or quasipoly)");
}

CapacityFn resolve_capacities(const EnumArgs& a, const Graph& g) {
  if (!a.capacity_file.empty() && a.capacity_all >= 0)
    throw input_error("--capacity-file and --capacity-all are exclusive");
  if (!a.capacity_file.empty()) {
    std::ifstream in = open_file(a.capacity_file);
    return parse_capacities(in, g.vertex_count());
  }
  if (a.capacity_all >= 0)
    return CapacityFn::uniform(g.vertex_count(), a.capacity_all);
  throw input_error("capacitated runs need --capacity-file or --capacity-all");
}

// Sink that prints each solution and, on request, one feasibility witness.
SolutionSink make_sink(std::ostream& out, const EnumArgs& a, const Graph& g,
                       const CapacityFn* c, CapKind kind) {
  if (!a.emit_assignment || c == nullptr) {
    return [&out](const VertexSet& s) { print_set(out, s); };
  }
  const CapacityFn cap = *c;
  return [&out, &g, cap, kind](const VertexSet& s) {
    print_set(out, s);
    auto witness = cap_feasible(g, cap, s, kind);
    if (!witness) throw contract_error("emitted solution lost feasibility");
    if (kind == CapKind::vertex_cover) {
      out << "# alpha";
      for (std::size_t e = 0; e < witness->alpha.size(); ++e)
        out << ' ' << e << ':' << witness->alpha[e];
      out << '\n';
    } else {
      out << "# beta";
      for (auto [u, dom] : witness->beta) out << ' ' << u << ':' << dom;
      out << '\n';
    }
    out.flush();
  };
}

int finish_run(std::ostream& out, const EnumArgs& a, const DelayStats& st,
               bool empty_is_status) {
  if (a.stats) print_stats(out, st);
  if (empty_is_status && st.outputs == 0) return kExitEmpty;
  return kExitOk;
}

int run_cvc(std::ostream& out, const EnumArgs& a) {
  Graph g = load_graph(a.graph_file);
  SolutionSink sink = make_sink(out, a, g, nullptr, CapKind::vertex_cover);
  DelayStats st;
  if (a.mode == "quasipoly")
    st = enumerate_cvc_quasipoly(g, sink, a.options());
  else
    st = enumerate_cvc(g, parse_mode(a.mode), sink, a.options());
  return finish_run(out, a, st, false);
}

int run_cds(std::ostream& out, const EnumArgs& a) {
  Graph g = load_graph(a.graph_file);
  SolutionSink sink = make_sink(out, a, g, nullptr, CapKind::dominating_set);
  DelayStats st = enumerate_cds(g, sink, a.options());
  return finish_run(out, a, st, false);
}

int run_cap(std::ostream& out, const EnumArgs& a, CapKind kind,
            bool connected) {
  Graph g = load_graph(a.graph_file);
  CapacityFn c = resolve_capacities(a, g);
  SolutionSink sink = make_sink(out, a, g, &c, kind);
  DelayStats st = connected
                      ? enumerate_connected_capacitated_vc(g, c, sink,
                                                           a.options())
                      : enumerate_capacitated(g, c, kind, sink, a.options());
  return finish_run(out, a, st, true);
}

int run_minaug(std::ostream& out, const std::string& file) {
  std::ifstream in = open_file(file);
  ContractedBipartite h = parse_bipartite_instance(in);
  for (const VertexSet& w : min_valid_aug(h)) print_set(out, w);
  return kExitOk;
}

int run_reduce(std::ostream& out, const std::string& file,
               const std::string& kind_name, const std::string& graph_out,
               const std::string& capacity_out) {
  Hypergraph h = load_hypergraph(file);
  ReductionKind kind = parse_reduction_kind(kind_name);
  ReductionInstance inst = build_reduction(h, kind);

  if (graph_out.empty()) {
    write_graph(out, inst.gadget);
  } else {
    std::ofstream gout(graph_out);
    if (!gout) throw input_error("cannot write '" + graph_out + "'");
    write_graph(gout, inst.gadget);
  }
  if (inst.capacities) {
    // capacities follow the graph on stdout unless routed to a file; the
    // parsers consume exactly their own lines, so the concatenation
    // round-trips
    if (capacity_out.empty()) {
      write_capacities(out, *inst.capacities);
    } else {
      std::ofstream cout_(capacity_out);
      if (!cout_) throw input_error("cannot write '" + capacity_out + "'");
      write_capacities(cout_, *inst.capacities);
    }
  } else if (!capacity_out.empty()) {
    throw input_error("--capacity-out given but kind '" + kind_name +
                      "' has no capacities");
  }
  return kExitOk;
}

int run_verify(std::ostream& out, const std::string& file,
               const std::string& kind_name) {
  Hypergraph h = load_hypergraph(file);
  VerifyReport rep = verify_reduction(h, parse_reduction_kind(kind_name));
  for (const std::string& line : rep.lines) out << line << '\n';
  out << (rep.pass ? "PASS" : "FAIL") << '\n';
  return rep.pass ? kExitOk : kExitEmpty;
}

int run_oracle(std::ostream& out, const EnumArgs& a,
               const std::string& problem) {
  if (problem == "transversal") {
    Hypergraph h = load_hypergraph(a.graph_file);
    if (h.n > 25) throw input_error("oracle is limited to 25 vertices");
    for (const VertexSet& t : oracle::brute_transversals(h)) print_set(out, t);
    return kExitOk;
  }
  if (problem == "minaug") {
    std::ifstream in = open_file(a.graph_file);
    ContractedBipartite h = parse_bipartite_instance(in);
    if (h.rights().size() > 20)
      throw input_error("oracle is limited to 20 right vertices");
    for (const VertexSet& w : oracle::brute_min_valid_aug(h)) print_set(out, w);
    return kExitOk;
  }

  Graph g = load_graph(a.graph_file);
  if (g.vertex_count() > 25) throw input_error("oracle is limited to 25 vertices");
  std::vector<VertexSet> family;
  bool capacitated = false;
  if (problem == "cvc" || problem == "cds") {
    BasicProperty p = problem == "cvc" ? BasicProperty::connected_vertex_cover
                                       : BasicProperty::connected_dominating_set;
    family = oracle::brute_minimal(g.vertex_count(), [&](const VertexSet& x) {
      return check_basic_property(g, x, p);
    });
  } else if (problem == "capvc" || problem == "capds") {
    capacitated = true;
    CapacityFn c = resolve_capacities(a, g);
    CapKind kind =
        problem == "capvc" ? CapKind::vertex_cover : CapKind::dominating_set;
    family = oracle::brute_minimal(g.vertex_count(), [&](const VertexSet& x) {
      return cap_feasible(g, c, x, kind).has_value();
    });
  } else {
    throw input_error("unknown oracle problem '" + problem + "'");
  }
  for (const VertexSet& s : family) print_set(out, s);
  return capacitated && family.empty() ? kExitEmpty : kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"enumeration of minimal connected and capacitated covers"};
  app.require_subcommand(1);

  EnumArgs cvc_a, cds_a, capvc_a, capds_a, capcvc_a, oracle_a;
  std::string minaug_file;
  std::string reduce_file, reduce_kind, reduce_graph_out, reduce_capacity_out;
  std::string verify_file, verify_kind;
  std::string oracle_problem;

  auto add_common = [](CLI::App* sub, EnumArgs& a) {
    sub->add_option("graph", a.graph_file, "graph file (\"n m\" then edges)")
        ->required();
    sub->add_flag("--stats", a.stats, "append a JSON stats line");
    sub->add_flag("--check", a.check,
                  "re-check minimality of every neighborhood result");
    sub->add_option("--max-solutions", a.max_solutions,
                    "stop after this many solutions (0 = all)");
  };
  auto add_capacity = [](CLI::App* sub, EnumArgs& a) {
    sub->add_option("--capacity-file", a.capacity_file,
                    "capacity file (n lines \"v c\")");
    sub->add_option("--capacity-all", a.capacity_all,
                    "uniform capacity for every vertex")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--emit-assignment", a.emit_assignment,
                  "print one witness assignment per solution");
  };

  CLI::App* cvc = app.add_subcommand("cvc", "minimal connected vertex covers");
  add_common(cvc, cvc_a);
  cvc->add_option("--mode", cvc_a.mode,
                  "degree, claw:<d>, budget:<k> or quasipoly");

  CLI::App* cds = app.add_subcommand("cds", "minimal connected dominating sets");
  add_common(cds, cds_a);

  CLI::App* capvc = app.add_subcommand("capvc", "minimal capacitated vertex covers");
  add_common(capvc, capvc_a);
  add_capacity(capvc, capvc_a);

  CLI::App* capds =
      app.add_subcommand("capds", "minimal capacitated dominating sets");
  add_common(capds, capds_a);
  add_capacity(capds, capds_a);

  CLI::App* capcvc = app.add_subcommand(
      "capcvc", "minimal connected capacitated vertex covers");
  add_common(capcvc, capcvc_a);
  add_capacity(capcvc, capcvc_a);

  CLI::App* minaug = app.add_subcommand(
      "minaug", "minimal valid augmentations of a bipartite instance");
  minaug->add_option("instance", minaug_file,
                     "instance file (\"nL nR m\" then edges \"l r\")")
      ->required();

  CLI::App* reduce =
      app.add_subcommand("reduce", "build a transversal gadget graph");
  reduce->add_option("--kind", reduce_kind,
                     "cvc, cvc-2deg, cds-cobip, capvc or capvc-2deg")
      ->required();
  reduce->add_option("hypergraph", reduce_file, "hypergraph file")->required();
  reduce->add_option("--graph-out", reduce_graph_out,
                     "write the gadget here instead of stdout");
  reduce->add_option("--capacity-out", reduce_capacity_out,
                     "write gadget capacities here instead of stdout");

  CLI::App* verify =
      app.add_subcommand("verify", "check a gadget against the oracle");
  verify->add_option("--kind", verify_kind, "reduction kind")->required();
  verify->add_option("hypergraph", verify_file, "hypergraph file")->required();

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "brute-force reference families");
  oracle_cmd
      ->add_option("--problem", oracle_problem,
                   "cvc, cds, capvc, capds, transversal or minaug")
      ->required();
  oracle_cmd->add_option("input", oracle_a.graph_file, "input file")->required();
  add_capacity(oracle_cmd, oracle_a);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (cvc->parsed()) return run_cvc(out, cvc_a);
    if (cds->parsed()) return run_cds(out, cds_a);
    if (capvc->parsed()) return run_cap(out, capvc_a, CapKind::vertex_cover, false);
    if (capds->parsed()) return run_cap(out, capds_a, CapKind::dominating_set, false);
    if (capcvc->parsed()) return run_cap(out, capcvc_a, CapKind::vertex_cover, true);
    if (minaug->parsed()) return run_minaug(out, minaug_file);
    if (reduce->parsed())
      return run_reduce(out, reduce_file, reduce_kind, reduce_graph_out,
                        reduce_capacity_out);
    if (verify->parsed()) return run_verify(out, verify_file, verify_kind);
    if (oracle_cmd->parsed()) return run_oracle(out, oracle_a, oracle_problem);
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const input_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  err << "error: no subcommand\n";
  return kExitInput;
}

}  // namespace covenum
