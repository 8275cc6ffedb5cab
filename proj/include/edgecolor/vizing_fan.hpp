#pragma once

#include <span>
#include <vector>

#include "edgecolor/coloring.hpp"
#include "edgecolor/separable_collection.hpp"

namespace edgecolor {

struct FanLeaf {
  Vertex vertex = kNoVertex;
  EdgeId edge = kNoEdge;
  int parent = -1;  // leaf whose color set holds the color of `edge`
};

// Vizing fan around `center`, primed by `primer`. Every leaf carries `mu`
// colors; with mu = 1 this is the classic fan (v_i, c_i) with parent i - 1.
struct VizingFan {
  Vertex center = kNoVertex;
  Color primer = kUncolored;
  int mu = 1;
  std::vector<FanLeaf> leaves;
  std::vector<Color> colors;  // mu per leaf
  bool trivial = false;
  Color chain_color = kUncolored;  // color of the last leaf used to extend
  int repeat = -1;                 // nontrivial: leaf owning chain_color
  uint64_t version = 0;

  int size() const { return static_cast<int>(leaves.size()); }
  std::span<const Color> colors_of(int i) const {
    return {colors.data() + static_cast<size_t>(i) * mu, static_cast<size_t>(mu)};
  }
  const FanLeaf& last() const { return leaves.back(); }
};

// Fan of the uncolored edge e = (u, v) primed by alpha in miss(u). With
// `avoid`, leaf colors are spare colors of that collection.
VizingFan build_multi_fan(const PartialColoring& chi, Vertex u, EdgeId e, Color alpha, int mu,
                          const SeparableCollection* avoid = nullptr);
inline VizingFan build_fan(const PartialColoring& chi, Vertex u, EdgeId e, Color alpha,
                           const SeparableCollection* avoid = nullptr) {
  return build_multi_fan(chi, u, e, alpha, 1, avoid);
}
inline VizingFan build_fan(const PartialColoring& chi, const UComponent& u_edge,
                           const SeparableCollection* avoid = nullptr, int mu = 1) {
  return build_multi_fan(chi, u_edge.center, u_edge.edge1, u_edge.center_color, mu, avoid);
}

// Leaf indices 0 = i_1 < ... < i_l = i along the parent links.
std::vector<int> rotation_chain(const VizingFan& fan, int i);
// Shift the uncolored edge of the fan to leaf i.
void rotate_to(PartialColoring& chi, const VizingFan& fan, int i);

// The maximal {primer, chain_color} path from the center; empty for trivial fans.
AlternatingPath vizing_path(const PartialColoring& chi, const VizingFan& fan, size_t limit = kUnlimited);

struct FanActivation {
  EdgeId colored_edge = kNoEdge;
  Color color = kUncolored;
  size_t path_length = 0;
  Vertex far_end = kNoVertex;  // other endpoint of the flipped path
};

// Colors the first edge of the fan (after rotation). Throws ContractError on a stale fan.
FanActivation activate_fan(PartialColoring& chi, const VizingFan& fan);

bool fan_is_valid(const PartialColoring& chi, const VizingFan& fan);
bool fan_avoids(const VizingFan& fan, const SeparableCollection& collection);
// Re-derive the terminal leaf under the current coloring, truncating at the
// first leaf whose colors meet miss(center). False when the fan is broken.
bool refresh_fan(const PartialColoring& chi, VizingFan& fan);

}  // namespace edgecolor
