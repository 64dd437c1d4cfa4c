// Command-line frontend: shift diagrams, axiom reports, ratio sweeps,
// temporal frame analysis, synthetic generators and brute-force oracles,
// all over the plain edge-list text format.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cpnet/axioms.hpp"
#include "cpnet/elites.hpp"
#include "cpnet/generators.hpp"
#include "cpnet/graph.hpp"
#include "cpnet/influence.hpp"
#include "cpnet/io.hpp"
#include "cpnet/oracles.hpp"
#include "cpnet/temporal.hpp"
#include "cpnet/version.hpp"

namespace {

using namespace cpnet;

// exit 2: bad invocation or I/O, as opposed to domain errors (exit 1)
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string self_loops = "implicit";
  bool dedup = false;
  unsigned threads = 0;

  SelfLoopMode mode() const {
    return self_loops == "none" ? SelfLoopMode::none : SelfLoopMode::implicit;
  }

  unsigned effective_threads() const {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("CPNET_THREADS")) {
      long v = std::strtol(env, nullptr, 10);
      if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
  }
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  return in;
}

Graph load_graph(const std::string& path, const GlobalOptions& g) {
  IngestOptions opts;
  opts.mode = g.mode();
  opts.dedup = g.dedup;
  if (path == "-") return ingest_edge_list(std::cin, opts);
  auto in = open_input(path);
  return ingest_edge_list(in, opts);
}

TimestampedEdgeList load_timestamped(const std::string& path) {
  if (path == "-") return ingest_timestamped_edge_list(std::cin);
  auto in = open_input(path);
  return ingest_timestamped_edge_list(in);
}

// Write through a stream chosen by --out ("-" is stdout).
void with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
  if (path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open output file '" + path + "'");
  fn(out);
}

std::vector<Vertex> ordering_from_flag(const Graph& g, const std::string& flag) {
  if (flag == "degree") return degree_ordering(g);
  if (flag.rfind("file:", 0) == 0) {
    auto in = open_input(flag.substr(5));
    std::unordered_map<std::string, Vertex> id_of;
    for (Vertex v = 0; v < g.n(); ++v) id_of.emplace(g.label(v), v);
    std::vector<Vertex> order;
    std::string line;
    while (std::getline(in, line)) {
      if (detail::is_comment_or_blank(line)) continue;
      auto f = detail::split_fields(line);
      if (f.size() != 1) throw std::invalid_argument("malformed ordering file");
      auto it = id_of.find(std::string(f[0]));
      if (it == id_of.end())
        throw std::invalid_argument("unknown vertex '" + std::string(f[0]) + "' in ordering");
      order.push_back(it->second);
    }
    return order;  // shift_diagram validates the permutation
  }
  throw UsageError("bad --ordering '" + flag + "': expected degree or file:<path>");
}

Partition elite_from_selector(const Graph& g, const std::string& spec) {
  EliteSelector sel;
  try {
    sel = parse_elite_selector(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  switch (sel.kind) {
    case EliteSelector::Kind::rich:
      if (sel.value > g.n())
        throw std::invalid_argument("rich-club size " + std::to_string(sel.value) +
                                    " out of range [1, " + std::to_string(g.n()) + "]");
      return rich_club(g, static_cast<std::uint32_t>(sel.value));
    case EliteSelector::Kind::core: {
      CoreDecomposition dec = core_decomposition(g);
      return c_core_elite(g, dec, static_cast<std::uint32_t>(sel.value));
    }
    case EliteSelector::Kind::file: {
      auto in = open_input(sel.path);
      return read_elite_file(in, g);
    }
  }
  throw UsageError("unreachable selector kind");
}

Rational parse_rational_opt(const std::string& s, const char* what) {
  try {
    Rational r = Rational::parse(s);
    if (!r.positive()) throw std::invalid_argument("must be positive");
    return r;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad ") + what + " '" + s + "': " + e.what());
  }
}

DegreeSequence degrees_from_spec(const std::string& spec) {
  if (std::filesystem::exists(spec)) {
    auto in = open_input(spec);
    return DegreeSequence::read(in);
  }
  if (spec.find_first_not_of("0123456789,") == std::string::npos)
    return DegreeSequence::parse_inline(spec);
  throw UsageError("--degrees '" + spec + "' is neither an existing file nor an inline list");
}

std::vector<std::string> header_comments(const std::string& params) {
  return {std::string("generated by cpnet v") + version, params};
}

int run(int argc, char** argv) {
  CLI::App app{"core-periphery influence analysis"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--self-loops", global.self_loops, "self-loop mode: implicit or none")
      ->check(CLI::IsMember({"implicit", "none"}))
      ->capture_default_str();
  app.add_flag("--dedup", global.dedup, "collapse parallel edges at ingestion");
  app.add_option("--threads", global.threads,
                 "max worker threads (default: CPNET_THREADS or hardware)");

  // shift
  auto* shift = app.add_subcommand("shift", "elite influence shift diagram");
  std::string shift_graph, shift_out = "-", shift_json, shift_ordering = "degree";
  std::size_t shift_max_rows = 0;
  shift->add_option("graph", shift_graph, "edge-list file or -")->required();
  shift->add_option("--out", shift_out, "diagram CSV (default stdout)");
  shift->add_option("--json", shift_json, "sidecar JSON path");
  shift->add_option("--ordering", shift_ordering, "degree or file:<path>");
  shift->add_option("--max-rows", shift_max_rows, "thin CSV to about this many rows");
  shift->callback([&] {
    Graph g = load_graph(shift_graph, global);
    if (g.n() < 2) throw std::invalid_argument("graph too small");
    ShiftDiagram d = shift_diagram(g, ordering_from_flag(g, shift_ordering));
    with_output(shift_out, [&](std::ostream& os) { write_shift_csv(os, g, d, shift_max_rows); });
    std::string sidecar = shift_json;
    if (sidecar.empty() && shift_out != "-") sidecar = shift_out + ".json";
    if (!sidecar.empty())
      with_output(sidecar, [&](std::ostream& os) { os << shift_sidecar_json(g, d); });
  });

  // axioms
  auto* axioms = app.add_subcommand("axioms", "axiom report for one partition");
  std::string ax_graph, ax_elite, ax_out = "-", ax_cd = "1", ax_cr = "1";
  axioms->add_option("graph", ax_graph)->required();
  axioms->add_option("--elite", ax_elite, "rich:<k>, core:<c> or file:<path>")->required();
  axioms->add_option("--cd", ax_cd, "dominance constant (rational)");
  axioms->add_option("--cr", ax_cr, "robustness constant (rational)");
  axioms->add_option("--out", ax_out, "report JSON (default stdout)");
  axioms->callback([&] {
    Graph g = load_graph(ax_graph, global);
    AxiomConfig cfg{parse_rational_opt(ax_cd, "--cd"), parse_rational_opt(ax_cr, "--cr")};
    Partition p = elite_from_selector(g, ax_elite);
    AxiomReport report = check_axioms(g, p, cfg);
    with_output(ax_out, [&](std::ostream& os) { os << axiom_report_json(g, report); });
  });

  // sweep
  auto* sweep = app.add_subcommand("sweep", "dom/rob/dns sweep over elite sizes");
  std::string sw_graph, sw_method = "rich", sw_out = "-", sw_cd = "1", sw_cr = "1";
  bool sw_log = false;
  std::size_t sw_points = 192;
  sweep->add_option("graph", sw_graph)->required();
  sweep->add_option("--method", sw_method)->check(CLI::IsMember({"rich", "core"}));
  sweep->add_flag("--log-grid", sw_log, "log-spaced elite sizes (rich method)");
  sweep->add_option("--points", sw_points, "grid size with --log-grid");
  sweep->add_option("--cd", sw_cd);
  sweep->add_option("--cr", sw_cr);
  sweep->add_option("--out", sw_out, "sweep CSV (default stdout)");
  sweep->callback([&] {
    Graph g = load_graph(sw_graph, global);
    AxiomConfig cfg{parse_rational_opt(sw_cd, "--cd"), parse_rational_opt(sw_cr, "--cr")};
    SweepOptions opts;
    opts.log_grid = sw_log;
    opts.points = sw_points;
    auto rows = sweep_ratios(g, sw_method == "rich" ? EliteMethod::rich : EliteMethod::core,
                             cfg, opts);
    with_output(sw_out, [&](std::ostream& os) { write_sweep_csv(os, rows); });
  });

  // temporal
  auto* temporal = app.add_subcommand("temporal", "elite fraction over growth frames");
  std::string tm_graph, tm_method = "rich", tm_out = "-";
  std::size_t tm_frames = 20;
  temporal->add_option("graph", tm_graph, "timestamped edge-list file or -")->required();
  temporal->add_option("--frames", tm_frames, "number of growth frames");
  temporal->add_option("--method", tm_method)->check(CLI::IsMember({"rich", "core"}));
  temporal->add_option("--out", tm_out, "frame CSV (default stdout)");
  temporal->callback([&] {
    TimestampedEdgeList tel = load_timestamped(tm_graph);
    FrameSeries series = elite_fraction_series(
        tel, tm_frames, tm_method == "rich" ? EliteMethod::rich : EliteMethod::core,
        global.mode(), global.dedup);
    with_output(tm_out, [&](std::ostream& os) { write_frames_csv(os, series); });
  });

  // generate
  auto* gen = app.add_subcommand("generate", "synthetic graphs");
  gen->require_subcommand(1);

  auto* gen_el = gen->add_subcommand("elitistic", "purely elitistic family");
  std::uint32_t el_z = 1, el_b = 1;
  std::string el_out = "-";
  gen_el->add_option("--z", el_z, "size parameter Z >= 1")->required();
  gen_el->add_option("--b", el_b, "robustness parameter (c_r = 1/b)");
  gen_el->add_option("--out", el_out);
  gen_el->callback([&] {
    PlantedGraph pg = generate_elitistic({el_z, el_b});
    auto comments = header_comments("elitistic z=" + std::to_string(el_z) +
                                    " b=" + std::to_string(el_b) + " mode=implicit elite=[0," +
                                    std::to_string(pg.partition.elite_size()) + ")");
    with_output(el_out, [&](std::ostream& os) { write_edge_list(os, pg.graph, comments); });
  });

  auto* gen_cm = gen->add_subcommand("config-model", "configuration-model multigraph");
  std::string cm_degrees, cm_out = "-";
  std::uint64_t cm_seed = 0;
  gen_cm->add_option("--degrees", cm_degrees, "degree file or inline list like 3,3,2,2,2")
      ->required();
  gen_cm->add_option("--seed", cm_seed, "RNG seed");
  gen_cm->add_option("--out", cm_out);
  gen_cm->callback([&] {
    DegreeSequence seq = degrees_from_spec(cm_degrees);
    Graph g = generate_configuration(seq, cm_seed);
    auto comments = header_comments("config-model n=" + std::to_string(seq.n()) +
                                    " m=" + std::to_string(seq.m()) +
                                    " seed=" + std::to_string(cm_seed) + " mode=none");
    with_output(cm_out, [&](std::ostream& os) { write_edge_list(os, g, comments); });
  });

  auto* gen_gr = gen->add_subcommand("grid", "square lattice");
  std::uint32_t gr_side = 2;
  std::string gr_out = "-";
  gen_gr->add_option("--side", gr_side, "lattice side >= 2")->required();
  gen_gr->add_option("--out", gr_out);
  gen_gr->callback([&] {
    Graph g = generate_grid(gr_side);
    auto comments =
        header_comments("grid side=" + std::to_string(gr_side) + " mode=implicit");
    with_output(gr_out, [&](std::ostream& os) { write_edge_list(os, g, comments); });
  });

  auto* gen_gw = gen->add_subcommand("growth", "timestamped elitistic growth family");
  std::uint32_t gw_zmax = 4, gw_b = 1;
  std::string gw_out = "-";
  gen_gw->add_option("--z-max", gw_zmax, "final stage Z")->required();
  gen_gw->add_option("--b", gw_b);
  gen_gw->add_option("--out", gw_out);
  gen_gw->callback([&] {
    TimestampedEdgeList tel = elitistic_growth(gw_zmax, gw_b);
    with_output(gw_out, [&](std::ostream& os) {
      os << "# generated by cpnet v" << version << '\n';
      os << "# elitistic-growth z_max=" << gw_zmax << " b=" << gw_b << '\n';
      for (const TimedEdge& e : tel.edges())
        os << tel.labels()[e.u] << ' ' << tel.labels()[e.v] << ' ' << e.t << '\n';
    });
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "brute-force references");
  oracle->require_subcommand(1);

  auto* or_min = oracle->add_subcommand("min-elite", "exhaustive minimal elite");
  std::string om_graph, om_out = "-", om_cd = "1", om_cr = "1";
  or_min->add_option("graph", om_graph)->required();
  or_min->add_option("--cd", om_cd);
  or_min->add_option("--cr", om_cr);
  or_min->add_option("--out", om_out);
  or_min->callback([&] {
    Graph g = load_graph(om_graph, global);
    AxiomConfig cfg{parse_rational_opt(om_cd, "--cd"), parse_rational_opt(om_cr, "--cr")};
    MinEliteResult r = min_elite_exhaustive(g, cfg);
    with_output(om_out, [&](std::ostream& os) { os << min_elite_json(g, r, cfg); });
  });

  auto* or_ec = oracle->add_subcommand("expect-config", "Monte-Carlo pairing expectations");
  std::string ec_degrees, ec_out = "-";
  std::size_t ec_i = 1;
  std::uint64_t ec_trials = 10000, ec_seed = 0;
  or_ec->add_option("--degrees", ec_degrees)->required();
  or_ec->add_option("--i", ec_i, "prefix elite size")->required();
  or_ec->add_option("--trials", ec_trials);
  or_ec->add_option("--seed", ec_seed);
  or_ec->add_option("--out", ec_out);
  or_ec->callback([&] {
    DegreeSequence seq = degrees_from_spec(ec_degrees);
    ExpectedInfluence formula = expected_influence(seq, ec_i);
    MonteCarloEstimate mc = monte_carlo_expected_influence(seq, ec_i, ec_trials, ec_seed,
                                                           global.effective_threads());
    with_output(ec_out,
                [&](std::ostream& os) { os << expect_config_json(seq, ec_i, formula, mc, ec_seed); });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
