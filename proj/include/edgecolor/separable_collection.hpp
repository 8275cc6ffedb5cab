#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "edgecolor/coloring.hpp"
#include "edgecolor/rng.hpp"

namespace edgecolor {

using Handle = int32_t;
inline constexpr Handle kNoHandle = -1;

enum class ComponentKind : uint8_t { edge, fan };

// A u-edge (center, leaf, edge, center color) or a u-fan (center, two
// leaves, two edges, center color, shared leaf color).
struct UComponent {
  ComponentKind kind = ComponentKind::edge;
  Vertex center = kNoVertex;
  Vertex leaf1 = kNoVertex;
  Vertex leaf2 = kNoVertex;
  EdgeId edge1 = kNoEdge;
  EdgeId edge2 = kNoEdge;
  Color center_color = kUncolored;
  Color leaf_color = kUncolored;

  static UComponent u_edge(Vertex u, Vertex v, EdgeId e, Color alpha) {
    return {ComponentKind::edge, u, v, kNoVertex, e, kNoEdge, alpha, kUncolored};
  }
  static UComponent u_fan(Vertex u, Vertex v, Vertex w, EdgeId uv, EdgeId uw, Color alpha, Color beta) {
    return {ComponentKind::fan, u, v, w, uv, uw, alpha, beta};
  }
  bool is_fan() const { return kind == ComponentKind::fan; }
  bool contains(Vertex x) const { return x == center || x == leaf1 || x == leaf2; }
  // Reserved color at x, kUncolored for the far end of a u-edge or non-members.
  Color color_at(Vertex x) const {
    if (x == center) return center_color;
    if (is_fan() && (x == leaf1 || x == leaf2)) return leaf_color;
    return kUncolored;
  }
};

// Edge-disjoint u-components whose reserved colors are distinct at every vertex.
class SeparableCollection {
 public:
  explicit SeparableCollection(const PartialColoring& chi);

  // Fails (nullopt) when the result would not be separable.
  std::optional<Handle> insert(const UComponent& g);
  bool erase(Handle h);
  void clear();

  bool contains(Handle h) const { return h >= 0 && h < static_cast<Handle>(items_.size()) && items_[h].alive; }
  const UComponent& get(Handle h) const { return items_[h].component; }
  Handle find_component(Vertex x, Color c) const { return psi_.get(x, c); }
  Handle component_of_edge(EdgeId e) const { return edge_owner_[e]; }

  bool is_spare(Vertex x, Color c) const;
  Color missing_color(Vertex x) const;
  // Lowest `k` spare colors of x.
  void spare_colors(Vertex x, int k, std::vector<Color>& out) const;

  bool is_valid(Handle h) const;
  std::vector<Handle> damaged_by_flip(std::pair<Vertex, Vertex> endpoints, std::pair<Color, Color> lost) const;
  // Components invalidated by the logged palette losses.
  void collect_damaged(std::span<const PaletteLoss> journal, std::vector<Handle>& out) const;

  Handle sample_uniform(Rng& rng) const;
  std::span<const Handle> handles() const { return dense_; }
  size_t size() const { return dense_.size(); }
  bool empty() const { return dense_.empty(); }
  size_t fan_count() const { return fans_; }
  size_t edge_count() const { return dense_.size() - fans_; }
  Handle capacity() const { return static_cast<Handle>(items_.size()); }

  // Full scan of separability and validity; throws InvariantViolation.
  void audit() const;

 private:
  struct Item {
    UComponent component;
    int position = -1;
    bool alive = false;
  };

  void reserve_color(Vertex x, Color c, Handle h);
  void release_color(Vertex x, Color c);

  const PartialColoring* chi_;
  std::vector<Item> items_;
  std::vector<Handle> dense_;
  VertexColorTable<Handle> psi_;
  std::vector<uint64_t> assigned_;  // bits below vertex capacity
  std::vector<Handle> edge_owner_;
  size_t fans_ = 0;
};

}  // namespace edgecolor
