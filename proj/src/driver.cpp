#include "edgecolor/driver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "edgecolor/bipartite.hpp"
#include "edgecolor/recursion.hpp"
#include "edgecolor/separable_collection.hpp"
#include "edgecolor/shannon.hpp"
#include "edgecolor/ufan_coloring.hpp"
#include "edgecolor/ufan_construction.hpp"
#include "edgecolor/vizing_fan.hpp"

namespace edgecolor {

Algorithm parse_algorithm(const std::string& name) {
  if (name == "nearlinear") return Algorithm::nearlinear;
  if (name == "classic") return Algorithm::classic;
  if (name == "greedy") return Algorithm::greedy;
  if (name == "bipartite") return Algorithm::bipartite;
  if (name == "multigraph") return Algorithm::multigraph;
  if (name == "shannon") return Algorithm::shannon;
  throw ContractError("unknown algorithm '" + name + "'");
}

std::string to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::nearlinear: return "nearlinear";
    case Algorithm::classic: return "classic";
    case Algorithm::greedy: return "greedy";
    case Algorithm::bipartite: return "bipartite";
    case Algorithm::multigraph: return "multigraph";
    case Algorithm::shannon: return "shannon";
  }
  return "unknown";
}

int palette_bound(Algorithm algo, const Graph& g) {
  const int delta = g.max_degree();
  const int mu = std::max(1, g.max_multiplicity());
  switch (algo) {
    case Algorithm::nearlinear: return delta + 1;
    case Algorithm::classic: return delta + mu;
    case Algorithm::greedy: return std::max(1, 2 * delta - 1);
    case Algorithm::bipartite: return std::max(1, delta);
    case Algorithm::multigraph: return delta + mu;
    case Algorithm::shannon: return std::max(1, 3 * delta / 2);
  }
  return delta + 1;
}

PartialColoring run_algorithm(Algorithm algo, const Graph& g, RunEnv& env) {
  switch (algo) {
    case Algorithm::nearlinear: return color_delta_plus_one(g, env);
    case Algorithm::classic: return classic_vizing(g, env);
    case Algorithm::greedy: return greedy_2delta(g);
    case Algorithm::bipartite: return bipartite_delta_color(g, env);
    case Algorithm::multigraph: return color_delta_plus_mu(g, env);
    case Algorithm::shannon: return shannon_color(g, env);
  }
  throw ContractError("unknown algorithm");
}

void vizing_step(PartialColoring& chi, EdgeId e, int mu) {
  if (chi.is_colored(e)) return;
  Vertex u = chi.graph().edge(e).u;
  VizingFan fan = build_multi_fan(chi, u, e, chi.missing_color_of(u), mu);
  activate_fan(chi, fan);
}

void main_extend(PartialColoring& chi, int lambda0, int delta, int mu, RunEnv& env) {
  const int start = chi.uncolored_count();
  if (start <= lambda0) return;
  Rng rng = env.fresh_rng();
  int rounds = 0;
  while (chi.uncolored_count() > lambda0) {
    env.check_deadline();
    const int before = chi.uncolored_count();
    SeparableCollection U(chi);
    std::vector<EdgeId> uncolored = chi.uncolored_edges();
    construct_u_fans(chi, uncolored, U, mu, env);
    color_u_fans(chi, U, delta, rng, env);
    ++rounds;
    env.count(Counter::main_extend_rounds);
    if (env.debug()) chi.audit();
    if (chi.uncolored_count() >= before) {
      throw InvariantViolation("main_extend stalled with " + std::to_string(before) + " uncolored edges after " +
                               std::to_string(rounds) + " rounds (palette " + std::to_string(chi.palette_size()) +
                               ", delta " + std::to_string(delta) + ")");
    }
  }
  double ratio = static_cast<double>(start) / std::max(1, lambda0);
  if (rounds > 400.0 * std::max(1.0, std::log2(ratio))) env.count(Counter::main_extend_round_bound_violations);
}

namespace {

PartialColoring base_case(const Graph& g, int palette, int mu, RunEnv& env) {
  PartialColoring chi(g, palette);
  for (EdgeId e = 0; e < g.num_edges(); ++e) vizing_step(chi, e, mu);
  env.count(Counter::base_case_edges, g.num_edges());
  return chi;
}

int ceil_div(int64_t a, int64_t b) { return static_cast<int>((a + b - 1) / b); }

PartialColoring solve(const Graph& g, bool multigraph, bool top, int depth, RunEnv& env) {
  env.check_deadline();
  env.stats().raise(Counter::recursion_depth, depth);
  const int m = g.num_edges();
  const int delta = g.max_degree();
  const int mu = multigraph ? std::max(1, g.max_multiplicity()) : 1;
  const int palette = std::max(1, delta + mu);
  if (m == 0) return PartialColoring(g, palette);
  if (delta <= 2 || m <= env.options().base_case_edges) return base_case(g, palette, mu, env);

  std::array<Graph, 2> parts = split_graph(g);
  std::array<std::vector<Color>, 2> colors;
  for (int s = 0; s < 2; ++s) colors[s] = colors_of(solve(parts[s], multigraph, false, depth + 1, env));
  MergedColoring merged = merge_colorings(g, parts, colors, palette);
  env.count(Counter::merges);
  if (merged.colors_before > (multigraph ? delta + mu + 2 : delta + 3)) env.count(Counter::merge_bound_violations);

  PartialColoring chi(g, palette);
  apply_colors(chi, merged.colors);
  main_extend(chi, ceil_div(m, delta), delta, mu, env);
  if (top) {
    int lambda1 = std::max(1, static_cast<int>(std::ceil(100.0 * std::log2(std::max(2, g.num_vertices())))));
    main_extend(chi, lambda1, delta, mu, env);
    for (EdgeId e : chi.uncolored_edges()) {
      vizing_step(chi, e, mu);
      env.count(Counter::classic_steps);
    }
  }
  if (env.debug()) chi.audit();
  return chi;
}

}  // namespace

PartialColoring color_delta_plus_one(const Graph& g, RunEnv& env) {
  if (g.is_multigraph()) throw ContractError("graph has parallel edges; use the multigraph algorithm");
  return solve(g, false, true, 0, env);
}

PartialColoring color_delta_plus_mu(const Graph& g, RunEnv& env) { return solve(g, true, true, 0, env); }

PartialColoring classic_vizing(const Graph& g, RunEnv& env) {
  const int mu = std::max(1, g.max_multiplicity());
  PartialColoring chi(g, std::max(1, g.max_degree() + mu));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if ((e & 1023) == 0) env.check_deadline();
    vizing_step(chi, e, mu);
  }
  env.count(Counter::classic_steps, g.num_edges());
  return chi;
}

PartialColoring greedy_2delta(const Graph& g) {
  PartialColoring chi(g, std::max(1, 2 * g.max_degree() - 1));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    Color c = chi.common_missing(g.edge(e).u, g.edge(e).v);
    if (c == kUncolored) throw InvariantViolation("greedy: no free color");
    chi.set_color(e, c);
  }
  return chi;
}

}  // namespace edgecolor
