// Command-line front end: solves instance files, runs the brute-force
// references, generates random instances and times the solvers.
//
// Exit codes: 0 success, 1 --verify mismatch, 2 usage or instance-file error,
// 3 input rejected by a solver (precondition failure or infeasible program).

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "intershift/gather.hpp"
#include "intershift/instance_io.hpp"
#include "intershift/kclique.hpp"
#include "intershift/lp.hpp"
#include "intershift/oracle.hpp"
#include "intershift/squares.hpp"

namespace {

using nlohmann::json;
using namespace intershift;

// Size caps for the brute-force references.
constexpr std::size_t kGatherOracleCap = 5000;
constexpr std::size_t kSquaresOracleCap = 300;
constexpr std::size_t kWindowOracleCap = 5000;
constexpr std::size_t kFullOracleCap = 12;
constexpr std::size_t kGridCap = 4;
constexpr std::size_t kCheckCap = 5000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Rejected : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct VerifyFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool verify = false;
  bool verbose = false;
  std::string output;
};

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("INTERVAL_SHIFT_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("INTERVAL_SHIFT_SEED: not an unsigned integer: ") + env);
  }
  return 1;
}

Instance load(const std::string& path, InstanceKind expected) {
  Instance inst;
  try {
    inst = load_instance(path);
  } catch (const InstanceError& e) {
    throw UsageError(e.what());
  }
  if (inst.kind != expected) {
    throw UsageError(path + ": kind: expected \"" +
                     std::string(expected == InstanceKind::kIntervals ? "intervals" : "squares") +
                     "\"");
  }
  if (inst.size() == 0) throw Rejected("empty instance");
  return inst;
}

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw UsageError(g.output + ": cannot write");
  out << text;
}

void emit_json(const Globals& g, const json& doc) { emit(g, doc.dump(2) + "\n"); }

void note_verify(json& doc, bool ran, bool ok, const std::string& what) {
  if (!ran) {
    doc["verify"] = {{"status", "skipped"}, {"reason", what}};
    return;
  }
  doc["verify"] = {{"status", ok ? "ok" : "mismatch"}, {"oracle", what}};
  if (!ok) throw VerifyFailed(what + " disagrees with the solver");
}

// Relative comparison for costs that should agree up to rounding.
bool same_cost(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

Property parse_property(const std::string& s) {
  if (s == "edgeless") return Property::kEdgeless;
  if (s == "acyclic") return Property::kAcyclic;
  if (s == "no-kclique") return Property::kNoKClique;
  if (s == "kconnected") return Property::kKConnected;
  throw UsageError("unknown property: " + s);
}

oracle::GraphProperty parse_graph_property(const std::string& s) {
  using oracle::GraphProperty;
  static const std::map<std::string, GraphProperty> names{
      {"complete", GraphProperty::kComplete},       {"edgeless", GraphProperty::kEdgeless},
      {"acyclic", GraphProperty::kAcyclic},         {"has-kclique", GraphProperty::kHasKClique},
      {"no-kclique", GraphProperty::kNoKClique},    {"kconnected", GraphProperty::kKConnected}};
  const auto it = names.find(s);
  if (it == names.end()) throw UsageError("unknown property: " + s);
  return it->second;
}

SelectionMode parse_selection(const std::string& s) {
  if (s == "mom") return SelectionMode::kMedianOfMedians;
  if (s == "introselect") return SelectionMode::kIntroselect;
  throw UsageError("unknown selection mode: " + s);
}

// ---- solve commands -------------------------------------------------------

struct GatherArgs {
  std::string file;
  std::string selection = "mom";
};

void run_gather(const Globals& g, const GatherArgs& a) {
  const auto inst = load(a.file, InstanceKind::kIntervals);
  const auto c = inst.collection();
  Stopwatch sw;
  const auto r = find_optimal_gathering_point(c, {parse_selection(a.selection)});
  const double ms = sw.ms();
  json doc{{"property", "complete"},
           {"cost", r.cost},
           {"points", {r.point_lo, r.point_hi}},
           {"shifts", r.shifts.displacements},
           {"mode", {{"selection", a.selection}}},
           {"wall_time_ms", ms}};
  if (g.verbose) doc["uniform_weight"] = c.uniform_weight();
  if (g.verify) {
    const bool ran = c.size() <= kGatherOracleCap;
    note_verify(doc, ran, ran && oracle::oracle_gathering(c).cost == r.cost,
                ran ? "oracle_gathering" : "n above oracle cap");
  }
  emit_json(g, doc);
}

void run_squares(const Globals& g, const std::string& file) {
  const auto inst = load(file, InstanceKind::kSquares);
  Stopwatch sw;
  const auto r = find_optimal_gathering_point_l1(inst.squares);
  const double ms = sw.ms();
  json shifts = json::array();
  for (const auto& s : r.shifts) shifts.push_back({s.dx, s.dy});
  json doc{{"property", "complete"},
           {"cost", r.cost},
           {"points", {{r.point.x, r.point.y}}},
           {"shifts", shifts},
           {"mode", {{"metric", "L1"}}},
           {"wall_time_ms", ms}};
  if (g.verbose) {
    doc["x_range"] = {r.x_range.first, r.x_range.second};
    doc["y_range"] = {r.y_range.first, r.y_range.second};
  }
  if (g.verify) {
    const bool ran = inst.squares.size() <= kSquaresOracleCap;
    note_verify(doc, ran, ran && oracle::oracle_squares(inst.squares).cost == r.cost,
                ran ? "oracle_squares" : "n above oracle cap");
  }
  emit_json(g, doc);
}

struct KCliqueArgs {
  std::string file;
  std::size_t k = 2;
};

void run_kclique(const Globals& g, const KCliqueArgs& a) {
  const auto inst = load(a.file, InstanceKind::kIntervals);
  const auto c = inst.collection();
  Stopwatch sw;
  CliqueResult r;
  try {
    r = solve_kclique(c, a.k, {g.verbose});
  } catch (const std::invalid_argument& e) {
    throw Rejected(e.what());
  }
  const double ms = sw.ms();
  json doc{{"property", "kclique"},
           {"k", a.k},
           {"cost", r.cost},
           {"points", {r.point}},
           {"window", r.window_start},
           {"shifts", r.shifts.displacements},
           {"mode", json::object()},
           {"wall_time_ms", ms}};
  if (g.verbose) {
    doc["members"] = r.members;
    double worst = 0.0;
    bool gap_free = true;
    for (const auto& t : r.trace) {
      worst = std::max({worst, std::abs(t.incremental_at_k - t.scratch_at_k),
                        std::abs(t.incremental_at_k1 - t.scratch_at_k1)});
      gap_free = gap_free && t.gap_free;
    }
    doc["trace"] = {{"windows", r.trace.size()}, {"max_update_error", worst}, {"gap_free", gap_free}};
  }
  if (g.verify) {
    const bool ran = c.size() <= kWindowOracleCap;
    bool ok = ran && oracle::oracle_kclique_windows(c, a.k).cost == r.cost;
    if (ok && c.size() <= kFullOracleCap) ok = same_cost(oracle::oracle_kclique_full(c, a.k), r.cost);
    note_verify(doc, ran, ok, ran ? "oracle_kclique_windows" : "n above oracle cap");
  }
  emit_json(g, doc);
}

struct LpArgs {
  std::string property;
  std::string file;
  std::size_t k = 2;
  double eps = 1e-6;
  bool paper_literal = false;
  std::string lp_dump;
};

PropertySpec make_spec(const std::string& property, std::size_t k, double eps, bool paper_literal) {
  PropertySpec spec;
  spec.property = parse_property(property);
  spec.k = k;
  spec.eps = eps;
  spec.offset = paper_literal ? KConnectedOffset::kPaperLiteral : KConnectedOffset::kValidated;
  if (!(eps > 0.0)) throw UsageError("--eps must be positive");
  return spec;
}

void run_lp(const Globals& g, const LpArgs& a) {
  const auto spec = make_spec(a.property, a.k, a.eps, a.paper_literal);
  const auto inst = load(a.file, InstanceKind::kIntervals);
  const auto c = inst.collection();
  Stopwatch sw;
  PropertySolution s;
  try {
    s = solve_property(c, spec);
    if (!a.lp_dump.empty()) {
      std::ofstream out(a.lp_dump);
      if (!out) throw UsageError(a.lp_dump + ": cannot write");
      const auto program = build_property_lp(sort_by_center(c), spec);
      write_lp_format(out, abs_value_transform(program).program, a.property);
    }
  } catch (const InfeasibleProgram& e) {
    throw Rejected(e.what());
  } catch (const std::invalid_argument& e) {
    throw Rejected(e.what());
  }
  const double ms = sw.ms();
  json doc{{"property", a.property},
           {"cost", s.cost},
           {"points", json::array()},
           {"shifts", s.shifts.displacements},
           {"epsilon", spec.property == Property::kKConnected ? 0.0 : spec.eps},
           {"mode", {{"paper_literal", a.paper_literal}}},
           {"wall_time_ms", ms}};
  if (spec.property == Property::kNoKClique || spec.property == Property::kKConnected) doc["k"] = a.k;
  if (g.verbose) {
    doc["cost_without_eps"] = s.cost_without_eps;
    doc["active_strict"] = s.active_strict;
    doc["pivots"] = s.pivots;
  }
  if (g.verify) {
    // The paper-literal system does not describe k-connectivity, so only the
    // constraint rows can be checked for it.
    const bool graph_check = !(spec.property == Property::kKConnected && a.paper_literal);
    const auto sorted = sort_by_center(c);
    const auto program = build_property_lp(sorted, spec);
    const auto order = sort_order(c);
    std::vector<double> x(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) x[i] = s.shifts.displacements[order[i]];
    bool ok = program.max_violation(x) <= 1e-7;
    if (ok && graph_check && c.size() <= kCheckCap) {
      ok = oracle::check_property(apply_shifts(c, s.shifts), oracle::graph_property_for(spec.property),
                                  spec.k, spec.eps / 2)
               .holds;
    }
    if (ok && c.size() <= kGridCap && graph_check) {
      const auto grid = oracle::grid_search_lp(c, spec);
      ok = grid.found && grid.cost >= s.cost - 1e-3;
    }
    note_verify(doc, true, ok, "constraint rows, check_property and grid_search_lp");
  }
  emit_json(g, doc);
}

// ---- oracle command -------------------------------------------------------

struct OracleArgs {
  std::string which;
  std::string file;
  std::string property = "complete";
  std::size_t k = 2;
  double eps = 1e-6;
  double tolerance = 0.0;
  bool full = false;
  bool paper_literal = false;
};

void require_cap(std::size_t n, std::size_t cap, const std::string& what) {
  if (n > cap) throw Rejected(what + " is capped at n = " + std::to_string(cap));
}

void run_oracle(const Globals& g, const OracleArgs& a) {
  Stopwatch sw;
  json doc;
  try {
    if (a.which == "gather") {
      const auto c = load(a.file, InstanceKind::kIntervals).collection();
      require_cap(c.size(), kGatherOracleCap, "oracle gather");
      const auto r = oracle::oracle_gathering(c);
      doc = {{"oracle", "gather"}, {"cost", r.cost}, {"points", {r.point}}};
    } else if (a.which == "squares") {
      const auto inst = load(a.file, InstanceKind::kSquares);
      require_cap(inst.size(), kSquaresOracleCap, "oracle squares");
      const auto r = oracle::oracle_squares(inst.squares);
      doc = {{"oracle", "squares"}, {"cost", r.cost}, {"points", {{r.point.x, r.point.y}}}};
    } else if (a.which == "kclique") {
      const auto c = load(a.file, InstanceKind::kIntervals).collection();
      if (a.full) {
        require_cap(c.size(), kFullOracleCap, "oracle kclique --full");
        doc = {{"oracle", "kclique-full"}, {"k", a.k}, {"cost", oracle::oracle_kclique_full(c, a.k)}};
      } else {
        require_cap(c.size(), kWindowOracleCap, "oracle kclique");
        const auto r = oracle::oracle_kclique_windows(c, a.k);
        doc = {{"oracle", "kclique-windows"}, {"k", a.k},           {"cost", r.cost},
               {"points", {r.point}},         {"window", r.window_start}};
      }
    } else if (a.which == "grid") {
      const auto spec = make_spec(a.property, a.k, a.eps, a.paper_literal);
      const auto c = load(a.file, InstanceKind::kIntervals).collection();
      require_cap(c.size(), kGridCap, "oracle grid");
      const auto r = oracle::grid_search_lp(c, spec);
      if (!r.found) throw Rejected("no feasible grid point within the search bound");
      doc = {{"oracle", "grid"}, {"property", a.property}, {"cost", r.cost}, {"shifts", r.displacements}};
    } else if (a.which == "check") {
      const auto c = load(a.file, InstanceKind::kIntervals).collection();
      require_cap(c.size(), kCheckCap, "oracle check");
      const auto r = oracle::check_property(c, parse_graph_property(a.property), a.k, a.tolerance);
      doc = {{"oracle", "check"}, {"property", r.property}, {"holds", r.holds}};
      if (!r.witness_kind.empty()) doc["witness"] = {{"kind", r.witness_kind}, {"vertices", r.witness}};
    } else {
      throw UsageError("unknown oracle: " + a.which);
    }
  } catch (const std::invalid_argument& e) {
    throw Rejected(e.what());
  }
  doc["wall_time_ms"] = sw.ms();
  emit_json(g, doc);
}

// ---- gen and bench --------------------------------------------------------

struct GenArgs {
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
  double span = 10.0;
  double grid = 0.5;
  std::string kind = "intervals";
  std::string name;
};

InstanceKind parse_kind(const std::string& s) {
  if (s == "intervals") return InstanceKind::kIntervals;
  if (s == "squares") return InstanceKind::kSquares;
  throw UsageError("unknown kind: " + s);
}

void run_gen(const Globals& g, const GenArgs& a) {
  if (a.n == 0) throw UsageError("--n must be at least 1");
  if (!(a.grid > 0.0)) throw UsageError("--grid must be positive");
  if (!(a.span >= 0.0)) throw UsageError("--span must be nonnegative");
  GenerateOptions opt;
  opt.n = a.n;
  opt.seed = a.seed ? *a.seed : default_seed();
  opt.span = a.span;
  opt.grid = a.grid;
  opt.kind = parse_kind(a.kind);
  auto inst = generate_instance(opt);
  if (!a.name.empty()) inst.name = a.name;
  emit(g, emit_instance(inst));
}

struct BenchArgs {
  std::string suite;
  std::optional<std::uint64_t> seed;
  int runs = 1;
};

struct BenchRow {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t k = 0;
};

std::vector<BenchRow> bench_suite(const std::string& name) {
  std::vector<BenchRow> rows;
  if (name == "gather" || name == "all") {
    for (std::size_t n : {250000, 500000, 1000000}) rows.push_back({"gather", n, 0});
  }
  if (name == "kclique" || name == "all") {
    for (std::size_t n : {25000, 50000, 100000}) rows.push_back({"kclique", n, n / 10});
  }
  if (name == "lp" || name == "all") {
    for (std::size_t n : {25, 50, 100}) rows.push_back({"lp-edgeless", n, 0});
  }
  if (name == "smoke") {
    rows = {{"gather", 1000, 0}, {"kclique", 1000, 100}, {"lp-edgeless", 20, 0}};
  }
  if (rows.empty()) throw UsageError("unknown suite: " + name + " (gather, kclique, lp, all, smoke)");
  return rows;
}

void run_bench(const Globals& g, const BenchArgs& a) {
  if (a.runs < 1) throw UsageError("--runs must be at least 1");
  const std::uint64_t seed = a.seed ? *a.seed : default_seed();
  std::ostringstream csv;
  csv << "algorithm,n,k,seed,wall_time_ms,cost\n";
  for (const auto& row : bench_suite(a.suite)) {
    for (int run = 0; run < a.runs; ++run) {
      GenerateOptions opt;
      opt.n = row.n;
      opt.seed = seed + static_cast<std::uint64_t>(run);
      // Keep density roughly constant as n grows.
      opt.span = std::max(10.0, static_cast<double>(row.n) / 4);
      const auto c = generate_instance(opt).collection();
      Stopwatch sw;
      double cost = 0.0;
      if (row.algorithm == "gather") {
        cost = find_optimal_gathering_point(c).cost;
      } else if (row.algorithm == "kclique") {
        cost = solve_kclique(c, row.k).cost;
      } else {
        cost = solve_property(c, {Property::kEdgeless, 2, 1e-6}).cost;
      }
      csv << row.algorithm << ',' << row.n << ',' << row.k << ',' << opt.seed << ','
          << std::setprecision(6) << sw.ms() << ',' << std::setprecision(17) << cost << '\n';
    }
  }
  emit(g, csv.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-displacement interval shifting solvers"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--verify", g.verify, "Re-check the result against the matching oracle");
  app.add_flag("--verbose", g.verbose, "Add diagnostic fields to the result");
  app.add_option("--output", g.output, "Write the result here instead of stdout");

  GatherArgs gather;
  auto* gather_cmd = app.add_subcommand("gather", "Optimal gathering point of an interval instance");
  gather_cmd->add_option("file", gather.file, "Instance file")->required();
  gather_cmd->add_option("--select", gather.selection, "Selection: mom or introselect")
      ->check(CLI::IsMember({"mom", "introselect"}));

  std::string squares_file;
  auto* squares_cmd = app.add_subcommand("squares", "L1 gathering point of a unit-square instance");
  squares_cmd->add_option("file", squares_file, "Instance file")->required();

  KCliqueArgs kclique;
  auto* kclique_cmd = app.add_subcommand("kclique", "Cheapest shift creating a k-clique");
  kclique_cmd->add_option("-k", kclique.k, "Clique size")->required();
  kclique_cmd->add_option("file", kclique.file, "Instance file")->required();

  LpArgs lp;
  auto* lp_cmd = app.add_subcommand("lp", "Cheapest shift reaching a graph property via LP");
  lp_cmd->add_option("property", lp.property, "edgeless, acyclic, no-kclique or kconnected")
      ->required()
      ->check(CLI::IsMember({"edgeless", "acyclic", "no-kclique", "kconnected"}));
  lp_cmd->add_option("file", lp.file, "Instance file")->required();
  lp_cmd->add_option("-k", lp.k, "k for no-kclique and kconnected");
  lp_cmd->add_option("--eps", lp.eps, "Strict-inequality margin");
  lp_cmd->add_flag("--paper-literal", lp.paper_literal, "kconnected: pair I_i with I_{i+k+1}");
  lp_cmd->add_option("--lp-dump", lp.lp_dump, "Also write the program in LP text format");

  OracleArgs orc;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force references (size-capped)");
  oracle_cmd->add_option("which", orc.which, "gather, squares, kclique, grid or check")
      ->required()
      ->check(CLI::IsMember({"gather", "squares", "kclique", "grid", "check"}));
  oracle_cmd->add_option("file", orc.file, "Instance file")->required();
  oracle_cmd->add_option("--property", orc.property, "Property for grid and check");
  oracle_cmd->add_option("-k", orc.k, "k for kclique, no-kclique, has-kclique, kconnected");
  oracle_cmd->add_option("--eps", orc.eps, "Margin for grid");
  oracle_cmd->add_option("--tolerance", orc.tolerance, "Intersection tolerance for check");
  oracle_cmd->add_flag("--full", orc.full, "kclique: enumerate every k-subset (n <= 12)");
  oracle_cmd->add_flag("--paper-literal", orc.paper_literal, "grid kconnected: paper-literal offset");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a reproducible random instance");
  gen_cmd->add_option("--n", gen.n, "Number of objects")->required();
  gen_cmd->add_option("--seed", gen.seed, "Seed (default INTERVAL_SHIFT_SEED or 1)");
  gen_cmd->add_option("--span", gen.span, "Coordinates lie in [-span, span]");
  gen_cmd->add_option("--grid", gen.grid, "Coordinate spacing");
  gen_cmd->add_option("--kind", gen.kind, "intervals or squares")
      ->check(CLI::IsMember({"intervals", "squares"}));
  gen_cmd->add_option("--name", gen.name, "Name stored in the file");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the solvers; CSV output");
  bench_cmd->add_option("--suite", bench.suite, "gather, kclique, lp, all or smoke")->required();
  bench_cmd->add_option("--seed", bench.seed, "Base seed (default INTERVAL_SHIFT_SEED or 1)");
  bench_cmd->add_option("--runs", bench.runs, "Runs per size, seeds base..base+runs-1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gather_cmd) run_gather(g, gather);
    else if (*squares_cmd) run_squares(g, squares_file);
    else if (*kclique_cmd) run_kclique(g, kclique);
    else if (*lp_cmd) run_lp(g, lp);
    else if (*oracle_cmd) run_oracle(g, orc);
    else if (*gen_cmd) run_gen(g, gen);
    else if (*bench_cmd) run_bench(g, bench);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Rejected& e) {
    std::cerr << "rejected: " << e.what() << '\n';
    return 3;
  } catch (const VerifyFailed& e) {
    std::cerr << "verify: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rejected: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
