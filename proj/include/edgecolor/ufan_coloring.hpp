#pragma once

#include <set>

#include <absl/container/flat_hash_map.h>

#include "edgecolor/coloring.hpp"
#include "edgecolor/separable_collection.hpp"
#include "edgecolor/workspace.hpp"

namespace edgecolor {

// Vertex-disjoint u-fans primed with one pair of colors.
struct PrimedSet {
  std::set<Handle> fans;
  absl::flat_hash_map<Vertex, Handle> vertices;

  size_t size() const { return fans.size(); }
  bool empty() const { return fans.empty(); }
  bool touches(Vertex x) const { return vertices.contains(x); }
  void add(Handle h, const UComponent& f);
  void remove(Handle h, const UComponent& f);
};

// Re-primes random u-fans of U with {alpha, beta} until about |U| / (48 delta)
// of them are in `primed`.
void prime_u_fans(PartialColoring& chi, SeparableCollection& U, Color alpha, Color beta, int delta,
                  PrimedSet& primed, Rng& rng, RunEnv& env);

// Colors one edge of each primed fan that survives; returns the count.
int activate_u_fans(PartialColoring& chi, SeparableCollection& U, PrimedSet& primed, RunEnv& env);

// max(1, delta / 2) rounds of priming and activation; returns edges colored.
int color_u_fans(PartialColoring& chi, SeparableCollection& U, int delta, Rng& rng, RunEnv& env);

}  // namespace edgecolor
