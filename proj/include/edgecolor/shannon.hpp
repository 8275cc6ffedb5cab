#pragma once

#include <optional>
#include <span>
#include <vector>

#include "edgecolor/coloring.hpp"
#include "edgecolor/rng.hpp"
#include "edgecolor/workspace.hpp"

namespace edgecolor {

// Center u, leaves v and w; (u, v) uncolored, (u, w) colored gamma.
// alpha is missing at u, beta at v and w, gamma at v.
struct ShannonFan {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;
  Vertex w = kNoVertex;
  EdgeId edge_uv = kNoEdge;
  EdgeId edge_uw = kNoEdge;
  Color alpha = kUncolored;
  Color beta = kUncolored;
  Color gamma = kUncolored;
};

struct PreShannonFan {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;
  Vertex w = kNoVertex;
  EdgeId edge_uv = kNoEdge;
  EdgeId edge_uw = kNoEdge;
  Color gamma = kUncolored;
};

bool is_valid(const PartialColoring& chi, const ShannonFan& s);
bool is_valid(const PartialColoring& chi, const PreShannonFan& s);

inline int shannon_palette(int delta) { return delta <= 0 ? 1 : 3 * delta / 2; }

// Colors e directly (nullopt) or returns a Shannon fan of e.
// Throws ContractError if e is colored or the palette is below floor(3Δ/2).
std::optional<ShannonFan> create_shannon_fan(PartialColoring& chi, EdgeId e);

// Same, starting from a pre-fan; only the color of edge_uw may change.
std::optional<ShannonFan> upgrade_pre_shannon_fan(PartialColoring& chi, const PreShannonFan& pre);

struct ShannonActivation {
  bool shifted = false;  // (u, w) recolored and (u, v) took gamma
  size_t path_length = 0;
};

// Flips one {alpha, beta} path from a leaf and colors edge_uv.
ShannonActivation activate_shannon_fan(PartialColoring& chi, const ShannonFan& s);

// Greedy vertex-disjoint pre-fans over edges whose endpoints share no missing color.
std::vector<PreShannonFan> construct_pre_shannon_fans(const PartialColoring& chi, std::span<const EdgeId> edges,
                                                      RunEnv& env);

// max(1, delta / 2) rounds of priming and activating the given vertex-disjoint
// fans; returns edges colored.
int color_shannon_fans(PartialColoring& chi, std::span<const ShannonFan> fans, int delta, Rng& rng, RunEnv& env);

// Colors every uncolored edge of `matching`; returns how many were uncolored.
int shannon_extend(PartialColoring& chi, std::span<const EdgeId> matching, int delta, Rng& rng, RunEnv& env);

// A floor(3Δ/2)-edge coloring of a loopless multigraph.
PartialColoring shannon_color(const Graph& g, RunEnv& env);

}  // namespace edgecolor
