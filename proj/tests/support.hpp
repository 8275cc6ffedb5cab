#pragma once

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "edgecolor/coloring.hpp"
#include "edgecolor/driver.hpp"
#include "edgecolor/generate.hpp"
#include "edgecolor/graph.hpp"
#include "edgecolor/recursion.hpp"
#include "edgecolor/rng.hpp"
#include "edgecolor/validate.hpp"

namespace testing {

using namespace edgecolor;

inline Graph make_graph(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

inline Graph gen(GraphKind kind, GenParams p, uint64_t seed = 0) { return generate(kind, p, seed); }

inline GenParams with_n(int n) {
  GenParams p;
  p.n = n;
  return p;
}

inline GenParams with_nm(int n, int64_t m) {
  GenParams p;
  p.n = n;
  p.m = m;
  return p;
}

inline GenParams with_nd(int n, int d) {
  GenParams p;
  p.n = n;
  p.d = d;
  return p;
}

inline GenParams with_mu(int mu) {
  GenParams p;
  p.mu = mu;
  return p;
}

// Proper and complete, with every color below `palette`.
inline bool proper_within(const PartialColoring& chi, int palette) {
  std::vector<Color> colors = colors_of(chi);
  return validate_coloring(chi.graph(), colors, palette).ok();
}

// Edge multiset over input labels.
inline std::vector<std::pair<int64_t, int64_t>> sorted_pairs(const Graph& g) {
  std::vector<std::pair<int64_t, int64_t>> out;
  for (const Edge& e : g.edges()) out.push_back(std::minmax(g.label(e.u), g.label(e.v)));
  std::sort(out.begin(), out.end());
  return out;
}

// A complete (Δ + mu)-coloring from the classic driver with up to `target`
// edges of a random matching uncolored again.
inline PartialColoring with_uncolored_matching(const Graph& g, int target, uint64_t seed) {
  RunEnv env(Options{.seed = seed});
  PartialColoring chi = g.is_multigraph() ? color_delta_plus_mu(g, env) : classic_vizing(g, env);
  std::vector<EdgeId> order(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) order[e] = e;
  Rng rng(seed, 99);
  rng.shuffle(std::span<EdgeId>(order));
  std::vector<char> used(g.num_vertices(), 0);
  int taken = 0;
  for (EdgeId e : order) {
    if (taken == target) break;
    Vertex u = g.edge(e).u;
    Vertex v = g.edge(e).v;
    if (used[u] || used[v]) continue;
    used[u] = used[v] = 1;
    chi.set_color(e, kUncolored);
    ++taken;
  }
  return chi;
}

inline int ceil_div(int64_t a, int64_t b) { return static_cast<int>((a + b - 1) / b); }

}  // namespace testing
