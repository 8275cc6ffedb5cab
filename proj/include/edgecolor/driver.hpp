#pragma once

#include <string>

#include "edgecolor/coloring.hpp"
#include "edgecolor/workspace.hpp"

namespace edgecolor {

enum class Algorithm { nearlinear, classic, greedy, bipartite, multigraph, shannon };

Algorithm parse_algorithm(const std::string& name);
std::string to_string(Algorithm algo);

// Largest number of colors the algorithm may use on g.
int palette_bound(Algorithm algo, const Graph& g);

PartialColoring run_algorithm(Algorithm algo, const Graph& g, RunEnv& env);

// Rounds of u-fan construction and coloring until at most lambda0 edges are
// uncolored. Throws InvariantViolation when a round makes no progress.
void main_extend(PartialColoring& chi, int lambda0, int delta, int mu, RunEnv& env);

// Colors e with one fan and one alternating path.
void vizing_step(PartialColoring& chi, EdgeId e, int mu = 1);

PartialColoring color_delta_plus_one(const Graph& g, RunEnv& env);
PartialColoring color_delta_plus_mu(const Graph& g, RunEnv& env);
PartialColoring classic_vizing(const Graph& g, RunEnv& env);
PartialColoring greedy_2delta(const Graph& g);

}  // namespace edgecolor
