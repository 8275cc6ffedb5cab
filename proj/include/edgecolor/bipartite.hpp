#pragma once

#include <span>

#include "edgecolor/coloring.hpp"
#include "edgecolor/workspace.hpp"

namespace edgecolor {

// Extends chi (palette Δ, bipartite graph) on a sample-driven subset of the
// uncolored matching `matching`. Returns the number of newly colored edges.
int bipartite_extension(PartialColoring& chi, std::span<const EdgeId> matching, Rng& rng, RunEnv& env);

// Colors e by flipping the path between the endpoints' missing colors.
void konig_extend(PartialColoring& chi, EdgeId e);

// Colors every edge of an uncolored matching by repeated extension.
void bipartite_color_matching(PartialColoring& chi, std::span<const EdgeId> matching, RunEnv& env);

// Proper Δ-edge coloring; throws NotBipartiteError for graphs with odd cycles.
PartialColoring bipartite_delta_color(const Graph& g, RunEnv& env);

}  // namespace edgecolor
