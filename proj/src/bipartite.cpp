#include "edgecolor/bipartite.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <string>

#include "edgecolor/recursion.hpp"

namespace edgecolor {

namespace {

struct Popular {
  EdgeId edge;
  Vertex alpha_end;  // misses alpha
  Vertex beta_end;   // misses beta
  bool active = true;
};

std::string describe(const Graph& g, EdgeId e) {
  return "edge " + std::to_string(e) + " (" + std::to_string(g.label(g.edge(e).u)) + ", " +
         std::to_string(g.label(g.edge(e).v)) + ")";
}

int64_t count_pair(const PartialColoring& chi, Color a, Color b) { return chi.class_size(a) + chi.class_size(b); }

}  // namespace

void konig_extend(PartialColoring& chi, EdgeId e) {
  const Graph& g = chi.graph();
  Vertex u = g.edge(e).u;
  Vertex v = g.edge(e).v;
  Color shared = chi.common_missing(u, v);
  if (shared != kUncolored) {
    chi.set_color(e, shared);
    return;
  }
  Color cu = chi.missing_color_of(u);
  Color cv = chi.missing_color_of(v);
  AlternatingPath path = chi.walk_alternating(v, cu, cv);
  if (path.end == u) throw NotBipartiteError("alternating path closes an odd cycle at " + describe(g, e));
  chi.flip(path);
  chi.set_color(e, cu);
}

int bipartite_extension(PartialColoring& chi, std::span<const EdgeId> matching, Rng& rng, RunEnv& env) {
  const Graph& g = chi.graph();
  const int lambda = static_cast<int>(matching.size());
  if (lambda == 0) return 0;
  env.count(Counter::bipartite_calls);
  const int delta = chi.palette_size();
  if (delta < 2) {
    int colored = 0;
    for (EdgeId e : matching) {
      Color c = chi.common_missing(g.edge(e).u, g.edge(e).v);
      if (c == kUncolored) throw NotBipartiteError("no free color for " + describe(g, e));
      chi.set_color(e, c);
      ++colored;
    }
    return colored;
  }

  auto pair = chi.least_common_colors(2);
  const Color alpha = pair[0];
  const Color beta = pair[1];
  const int threshold = std::max(1, (lambda + 10 * delta - 1) / (10 * delta));
  const int64_t pair_start = count_pair(chi, alpha, beta);

  absl::flat_hash_map<EdgeId, int> state;  // 1 = in Φ, 2 = colored directly
  absl::flat_hash_map<Vertex, int> phi_at;
  std::vector<Popular> phi;
  int direct = 0;
  int64_t successes = 0;
  int64_t budget = 16LL * threshold;
  int64_t spent = 0;
  int restarts = 0;
  Rng stream = rng;
  AlternatingPath pu;
  AlternatingPath pv;

  auto ends_in_phi = [&](const AlternatingPath& p) { return !p.empty() && phi_at.contains(p.end); };

  while (static_cast<int>(phi.size()) + direct < threshold) {
    env.check_deadline();
    if (spent == budget) {
      if (restarts == 8) break;
      ++restarts;
      env.count(Counter::bipartite_restarts);
      stream = env.fresh_rng();
      spent = 0;
    }
    ++spent;
    env.count(Counter::bipartite_iterations);
    EdgeId e = matching[stream.below(lambda)];
    if (state.contains(e)) continue;
    Vertex u = g.edge(e).u;
    Vertex v = g.edge(e).v;
    Color cu = chi.missing_color_of(u);
    Color cv = chi.missing_color_of(v);
    if (cu == cv) {
      chi.set_color(e, cu);
      state[e] = 2;
      ++direct;
      ++successes;
      env.count(Counter::bipartite_successes);
      continue;
    }
    if (cu == beta || cv == alpha) {
      std::swap(u, v);
      std::swap(cu, cv);
    }
    pu.edges.clear();
    pv.edges.clear();
    if (cu != alpha) chi.walk_alternating(u, cu, alpha, kUnlimited, pu);
    if (cv != beta) chi.walk_alternating(v, cv, beta, kUnlimited, pv);
    if (ends_in_phi(pu) || ends_in_phi(pv)) continue;
    if (!pu.empty()) chi.flip(pu);
    if (!pv.empty()) chi.flip(pv);
    env.count(Counter::flips, (pu.empty() ? 0 : 1) + (pv.empty() ? 0 : 1));
    env.count(Counter::flip_length, static_cast<int64_t>(pu.length() + pv.length()));
    state[e] = 1;
    phi_at[u] = static_cast<int>(phi.size());
    phi_at[v] = static_cast<int>(phi.size());
    phi.push_back({e, u, v});
    ++successes;
    env.count(Counter::bipartite_successes);

    if (env.debug()) {
      for (const Popular& p : phi) {
        if (!chi.is_missing(p.alpha_end, alpha) || !chi.is_missing(p.beta_end, beta)) {
          throw InvariantViolation("bipartite: popular " + describe(g, p.edge) + " lost its orientation");
        }
      }
      if (count_pair(chi, alpha, beta) > pair_start + 4 * successes) {
        throw InvariantViolation("bipartite: too many edges colored with the chosen pair");
      }
    }
  }

  int colored = 0;
  for (size_t i = 0; i < phi.size(); ++i) {
    Popular& p = phi[i];
    if (!p.active) continue;
    p.active = false;
    Vertex u = p.alpha_end;
    Vertex v = p.beta_end;
    if (chi.is_missing(u, beta)) {
      chi.set_color(p.edge, beta);
    } else if (chi.is_missing(v, alpha)) {
      chi.set_color(p.edge, alpha);
    } else {
      AlternatingPath path = chi.walk_alternating(u, alpha, beta);
      if (path.end == v) throw NotBipartiteError("alternating path closes an odd cycle at " + describe(g, p.edge));
      chi.flip(path);
      env.count(Counter::flips);
      env.count(Counter::flip_length, static_cast<int64_t>(path.length()));
      chi.set_color(p.edge, beta);
      auto it = phi_at.find(path.end);
      if (it != phi_at.end() && phi[it->second].active) {
        phi[it->second].active = false;
        env.count(Counter::damage_events);
      }
    }
    ++colored;
  }
  if (2 * colored < static_cast<int>(phi.size())) env.count(Counter::bipartite_forloop_violations);
  return direct + colored;
}

void bipartite_color_matching(PartialColoring& chi, std::span<const EdgeId> matching, RunEnv& env) {
  std::vector<EdgeId> remaining(matching.begin(), matching.end());
  Rng rng = env.fresh_rng();
  while (!remaining.empty()) {
    int colored = bipartite_extension(chi, remaining, rng, env);
    std::erase_if(remaining, [&](EdgeId e) { return chi.is_colored(e); });
    if (colored == 0 && !remaining.empty()) {
      konig_extend(chi, remaining.back());
      remaining.pop_back();
      env.count(Counter::bipartite_fallback_edges);
    }
  }
}

namespace {

std::vector<Color> color_recursive(const Graph& g, RunEnv& env, int depth) {
  const int m = g.num_edges();
  const int delta = g.max_degree();
  env.stats().raise(Counter::recursion_depth, depth);
  if (m == 0) return {};
  if (delta <= 1) return std::vector<Color>(m, 0);
  if (m <= env.options().base_case_edges) {
    PartialColoring chi(g, delta);
    for (EdgeId e = 0; e < m; ++e) konig_extend(chi, e);
    env.count(Counter::base_case_edges, m);
    return colors_of(chi);
  }
  std::array<Graph, 2> parts = split_graph(g);
  std::array<std::vector<Color>, 2> colors;
  for (int s = 0; s < 2; ++s) colors[s] = color_recursive(parts[s], env, depth + 1);
  MergedColoring merged = merge_colorings(g, parts, colors, delta);
  env.count(Counter::merges);
  if (merged.colors_before > delta + 1) env.count(Counter::merge_bound_violations);
  PartialColoring chi(g, delta);
  apply_colors(chi, merged.colors);
  for (const auto& matching : merged.dropped) bipartite_color_matching(chi, matching, env);
  if (env.debug()) chi.audit();
  return colors_of(chi);
}

}  // namespace

PartialColoring bipartite_delta_color(const Graph& g, RunEnv& env) {
  if (!is_bipartite(g)) throw NotBipartiteError("graph is not bipartite: it has an odd cycle");
  PartialColoring chi(g, std::max(1, g.max_degree()));
  apply_colors(chi, color_recursive(g, env, 0));
  return chi;
}

}  // namespace edgecolor
