#include "commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "edgecolor/bench.hpp"
#include "edgecolor/driver.hpp"
#include "edgecolor/generate.hpp"
#include "edgecolor/recursion.hpp"
#include "edgecolor/report.hpp"
#include "edgecolor/validate.hpp"

namespace edgecolor::cli {

bool debug_from_env() {
  const char* value = std::getenv("EDGECOLOR_DEBUG");
  return value != nullptr && std::string(value) == "1";
}

namespace {

struct ColorArgs {
  std::string algo = "nearlinear";
  uint64_t seed = 0;
  bool debug = false;
  std::string out;
  std::string report;
  std::string input;
};

struct ValidateArgs {
  std::string graph;
  std::string coloring;
  int palette = 0;
};

struct GenArgs {
  std::string kind;
  GenParams params;
  uint64_t seed = 0;
  std::string out;
};

struct BenchArgs {
  std::vector<std::string> algos;
  std::vector<int64_t> sizes;
  int delta = 64;
  std::vector<uint64_t> seeds{1};
  double budget = 0;
  int reps = 1;
  bool no_warmup = false;
  std::string csv;
};

// Writes to `path`, or to `fallback` when path is empty or "-".
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& write) {
  if (path.empty() || path == "-") {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  write(file);
}

int cmd_color(const ColorArgs& a, std::ostream& out, std::ostream& err) {
  Algorithm algo = parse_algorithm(a.algo);
  Graph g = load_graph(a.input);
  Options options;
  options.seed = a.seed;
  options.debug = a.debug || debug_from_env();
  RunEnv env(options);
  auto start = std::chrono::steady_clock::now();
  PartialColoring chi = run_algorithm(algo, g, env);
  int64_t ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
  std::vector<Color> colors = colors_of(chi);
  const int bound = palette_bound(algo, g);
  Verdict verdict = validate_coloring(g, colors, bound);
  emit(a.out, out, [&](std::ostream& s) { write_coloring(s, g, colors); });
  RunReport report = make_report(to_string(algo), chi, bound, ns, env);
  if (!a.report.empty()) {
    emit(a.report, out, [&](std::ostream& s) { s << to_json_string(report) << '\n'; });
  }
  if (!verdict.ok()) {
    err << "validation failed: " << verdict.violations.size() << " violations\n";
    for (size_t i = 0; i < verdict.violations.size() && i < 20; ++i) err << "  " << verdict.violations[i].describe(g) << '\n';
    return kExitFailure;
  }
  err << to_string(algo) << ": " << verdict.colors_used << " colors (bound " << bound << "), m=" << g.num_edges()
      << ", " << ns / 1000000 << " ms\n";
  return kExitOk;
}

int cmd_validate(const ValidateArgs& a, std::ostream& out) {
  Graph g = load_graph(a.graph);
  std::vector<Color> colors = load_coloring(a.coloring, g);
  Verdict v = validate_coloring(g, colors, a.palette);
  out << (v.ok() ? "valid" : "invalid") << " proper=" << (v.proper ? 1 : 0) << " colors_used=" << v.colors_used
      << " uncolored=" << v.uncolored;
  if (a.palette > 0) out << " palette_ok=" << (v.palette_ok ? 1 : 0);
  out << '\n';
  for (const Violation& x : v.violations) out << x.describe(g) << '\n';
  return v.ok() ? kExitOk : kExitFailure;
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  Graph g = generate(parse_graph_kind(a.kind), a.params, a.seed);
  emit(a.out, out, [&](std::ostream& s) { write_edge_list(s, g); });
  return kExitOk;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  BenchConfig config;
  for (const std::string& name : a.algos) config.algos.push_back(parse_algorithm(name));
  config.sizes = a.sizes;
  config.delta = a.delta;
  config.seeds = a.seeds;
  if (a.budget > 0) config.budget_seconds = a.budget;
  config.reps = a.reps;
  config.warmup = !a.no_warmup;
  std::vector<BenchRow> rows = run_bench(config);
  emit(a.csv, out, [&](std::ostream& s) { write_csv(s, rows); });
  bool ok = true;
  for (const BenchRow& row : rows) ok = ok && (row.timeout || row.proper);
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge coloring engine", "edgecolor"};
  app.require_subcommand(1);

  ColorArgs color;
  auto* c = app.add_subcommand("color", "color the edges of a graph");
  c->add_option("--algo", color.algo, "nearlinear|classic|greedy|bipartite|multigraph|shannon");
  c->add_option("--seed", color.seed);
  c->add_flag("--debug-invariants", color.debug);
  c->add_option("--out", color.out, "coloring file (default stdout)");
  c->add_option("--report", color.report, "JSON run report");
  c->add_option("input", color.input)->required();

  ValidateArgs validate;
  auto* v = app.add_subcommand("validate", "check a coloring file against a graph");
  v->add_option("graph", validate.graph)->required();
  v->add_option("coloring", validate.coloring)->required();
  v->add_option("--palette", validate.palette, "colors allowed, 0 for no bound");

  GenArgs gen;
  auto* gcmd = app.add_subcommand("gen", "generate a graph as an edge list");
  gcmd->add_option("--kind", gen.kind)->required();
  gcmd->add_option("--n", gen.params.n);
  gcmd->add_option("--m", gen.params.m);
  gcmd->add_option("--d", gen.params.d);
  gcmd->add_option("--a", gen.params.a);
  gcmd->add_option("--b", gen.params.b);
  gcmd->add_option("--mu", gen.params.mu);
  gcmd->add_option("--rows", gen.params.rows);
  gcmd->add_option("--cols", gen.params.cols);
  gcmd->add_option("--seed", gen.seed);
  gcmd->add_option("--out", gen.out);

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "time algorithms over a size ladder");
  b->add_option("--algos", bench.algos)->required()->delimiter(',');
  b->add_option("--sizes", bench.sizes)->required()->delimiter(',');
  b->add_option("--delta", bench.delta);
  b->add_option("--seeds", bench.seeds)->delimiter(',');
  b->add_option("--budget", bench.budget, "seconds per run");
  b->add_option("--reps", bench.reps);
  b->add_flag("--no-warmup", bench.no_warmup);
  b->add_option("--csv", bench.csv)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (c->parsed()) return cmd_color(color, out, err);
    if (v->parsed()) return cmd_validate(validate, out);
    if (gcmd->parsed()) return cmd_gen(gen, out);
    if (b->parsed()) return cmd_bench(bench, out);
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GenerateError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace edgecolor::cli
