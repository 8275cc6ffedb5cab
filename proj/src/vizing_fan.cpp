#include "edgecolor/vizing_fan.hpp"

#include <algorithm>
#include <string>

namespace edgecolor {

namespace {

// Stamped arrays reused across calls on the same thread.
struct FanScratch {
  std::vector<uint32_t> color_stamp;
  std::vector<int> color_owner;
  std::vector<uint32_t> vertex_stamp;
  std::vector<Color> frontier;
  std::vector<Color> picked;
  uint32_t stamp = 0;

  void begin(int colors, int vertices) {
    if (static_cast<int>(color_stamp.size()) < colors) {
      color_stamp.resize(colors, 0);
      color_owner.resize(colors, -1);
    }
    if (static_cast<int>(vertex_stamp.size()) < vertices) vertex_stamp.resize(vertices, 0);
    if (++stamp == 0) {
      std::fill(color_stamp.begin(), color_stamp.end(), 0);
      std::fill(vertex_stamp.begin(), vertex_stamp.end(), 0);
      stamp = 1;
    }
  }
  int owner(Color c) const { return color_stamp[c] == stamp ? color_owner[c] : -1; }
  void own(Color c, int leaf) {
    color_stamp[c] = stamp;
    color_owner[c] = leaf;
  }
  bool seen(Vertex v) const { return vertex_stamp[v] == stamp; }
  void see(Vertex v) { vertex_stamp[v] = stamp; }
};

thread_local FanScratch scratch;

bool joins(const Graph& g, EdgeId e, Vertex a, Vertex b) {
  const Edge& ed = g.edge(e);
  return (ed.u == a && ed.v == b) || (ed.u == b && ed.v == a);
}

void leaf_colors(const PartialColoring& chi, const SeparableCollection* avoid, Vertex v, int mu,
                 std::vector<Color>& out) {
  if (avoid != nullptr) {
    avoid->spare_colors(v, mu, out);
  } else {
    chi.lowest_missing(v, mu, out);
  }
  if (static_cast<int>(out.size()) < mu) {
    throw InvariantViolation("vertex " + std::to_string(v) + " has fewer than mu free colors");
  }
}

}  // namespace

VizingFan build_multi_fan(const PartialColoring& chi, Vertex u, EdgeId e, Color alpha, int mu,
                          const SeparableCollection* avoid) {
  const Graph& g = chi.graph();
  if (chi.is_colored(e)) throw ContractError("build_fan: edge is colored");
  if (!chi.is_missing(u, alpha)) throw ContractError("build_fan: primer is not missing at the center");
  VizingFan fan;
  fan.center = u;
  fan.primer = alpha;
  fan.mu = mu;
  fan.version = chi.version();
  fan.leaves.reserve(4);
  fan.colors.reserve(4 * static_cast<size_t>(mu));
  scratch.begin(chi.palette_size(), g.num_vertices());
  scratch.see(u);

  std::vector<Color>& frontier = scratch.frontier;
  std::vector<Color>& picked = scratch.picked;
  frontier.clear();
  size_t head = 0;
  FanLeaf next{g.other(e, u), e, -1};
  while (true) {
    int index = fan.size();
    fan.leaves.push_back(next);
    scratch.see(next.vertex);
    leaf_colors(chi, avoid, next.vertex, mu, picked);
    fan.colors.insert(fan.colors.end(), picked.begin(), picked.end());

    Color hit_u = kUncolored;
    Color hit_repeat = kUncolored;
    for (Color c : picked) {
      if (chi.is_missing(u, c)) {
        if (hit_u == kUncolored || c < hit_u) hit_u = c;
      } else if (scratch.owner(c) >= 0) {
        if (hit_repeat == kUncolored || c < hit_repeat) hit_repeat = c;
      }
    }
    if (hit_u != kUncolored) {
      fan.trivial = true;
      fan.chain_color = hit_u;
      return fan;
    }
    if (hit_repeat != kUncolored) {
      fan.trivial = false;
      fan.chain_color = hit_repeat;
      fan.repeat = scratch.owner(hit_repeat);
      return fan;
    }
    for (Color c : picked) {
      scratch.own(c, index);
      frontier.push_back(c);
    }
    next.vertex = kNoVertex;
    while (head < frontier.size()) {
      Color c = frontier[head];
      EdgeId f = chi.slot(u, c);
      if (f == kNoEdge) throw InvariantViolation("fan color missing at center");
      Vertex w = g.other(f, u);
      if (scratch.seen(w)) {
        ++head;
        continue;
      }
      next = {w, f, scratch.owner(c)};
      ++head;
      break;
    }
    if (next.vertex == kNoVertex) throw InvariantViolation("fan construction ran out of leaves");
  }
}

std::vector<int> rotation_chain(const VizingFan& fan, int i) {
  if (i < 0 || i >= fan.size()) throw ContractError("rotation index out of range");
  std::vector<int> chain;
  for (int t = i; t >= 0; t = fan.leaves[t].parent) {
    chain.push_back(t);
    if (t == 0) break;
  }
  std::reverse(chain.begin(), chain.end());
  if (chain.front() != 0) throw InvariantViolation("fan parent links do not reach the first leaf");
  return chain;
}

void rotate_to(PartialColoring& chi, const VizingFan& fan, int i) {
  std::vector<int> chain = rotation_chain(fan, i);
  if (chain.size() == 1) return;
  std::vector<Color> shifted(chain.size() - 1);
  for (size_t s = 0; s + 1 < chain.size(); ++s) shifted[s] = chi.color_of(fan.leaves[chain[s + 1]].edge);
  for (size_t s = 1; s < chain.size(); ++s) chi.set_color(fan.leaves[chain[s]].edge, kUncolored);
  for (size_t s = 0; s + 1 < chain.size(); ++s) chi.set_color(fan.leaves[chain[s]].edge, shifted[s]);
}

AlternatingPath vizing_path(const PartialColoring& chi, const VizingFan& fan, size_t limit) {
  if (fan.trivial) {
    AlternatingPath empty;
    empty.a = fan.primer;
    empty.b = fan.chain_color;
    empty.start = empty.end = fan.center;
    return empty;
  }
  return chi.walk_alternating(fan.center, fan.primer, fan.chain_color, limit);
}

bool fan_is_valid(const PartialColoring& chi, const VizingFan& fan) {
  const Graph& g = chi.graph();
  const Vertex u = fan.center;
  if (fan.leaves.empty() || !chi.is_missing(u, fan.primer)) return false;
  for (int i = 0; i < fan.size(); ++i) {
    const FanLeaf& leaf = fan.leaves[i];
    if (!joins(g, leaf.edge, u, leaf.vertex)) return false;
    if (i == 0) {
      if (chi.is_colored(leaf.edge)) return false;
    } else {
      if (leaf.parent < 0 || leaf.parent >= i) return false;
      auto parent_colors = fan.colors_of(leaf.parent);
      if (std::find(parent_colors.begin(), parent_colors.end(), chi.color_of(leaf.edge)) == parent_colors.end()) {
        return false;
      }
    }
    for (Color c : fan.colors_of(i)) {
      if (!chi.is_missing(leaf.vertex, c)) return false;
      if (i + 1 < fan.size() && chi.is_missing(u, c)) return false;
    }
  }
  auto last = fan.colors_of(fan.size() - 1);
  if (std::find(last.begin(), last.end(), fan.chain_color) == last.end()) return false;
  if (fan.trivial) return chi.is_missing(u, fan.chain_color);
  if (fan.repeat < 0 || fan.repeat + 1 >= fan.size() || chi.is_missing(u, fan.chain_color)) return false;
  auto owner = fan.colors_of(fan.repeat);
  return std::find(owner.begin(), owner.end(), fan.chain_color) != owner.end();
}

bool fan_avoids(const VizingFan& fan, const SeparableCollection& collection) {
  for (int i = 0; i < fan.size(); ++i) {
    for (Color c : fan.colors_of(i)) {
      if (collection.find_component(fan.leaves[i].vertex, c) != kNoHandle) return false;
    }
  }
  return true;
}

bool refresh_fan(const PartialColoring& chi, VizingFan& fan) {
  const Vertex u = fan.center;
  for (int i = 0; i < fan.size(); ++i) {
    Color hit = kUncolored;
    for (Color c : fan.colors_of(i)) {
      if (chi.is_missing(u, c) && (hit == kUncolored || c < hit)) hit = c;
    }
    if (hit != kUncolored) {
      fan.leaves.resize(i + 1);
      fan.colors.resize(static_cast<size_t>(i + 1) * fan.mu);
      fan.trivial = true;
      fan.chain_color = hit;
      fan.repeat = -1;
      break;
    }
  }
  fan.version = chi.version();
  return fan_is_valid(chi, fan);
}

FanActivation activate_fan(PartialColoring& chi, const VizingFan& fan) {
  if (!fan_is_valid(chi, fan)) throw ContractError("activate_fan: fan is stale");
  FanActivation report;
  report.color = fan.chain_color;
  const int k = fan.size() - 1;
  if (fan.trivial) {
    rotate_to(chi, fan, k);
    chi.set_color(fan.leaves[k].edge, fan.chain_color);
    report.colored_edge = fan.leaves[k].edge;
    report.far_end = fan.center;
    return report;
  }
  AlternatingPath path = chi.walk_alternating(fan.center, fan.primer, fan.chain_color);
  chi.flip(path);
  int target = path.end == fan.leaves[fan.repeat].vertex ? k : fan.repeat;
  rotate_to(chi, fan, target);
  chi.set_color(fan.leaves[target].edge, fan.chain_color);
  report.colored_edge = fan.leaves[target].edge;
  report.path_length = path.length();
  report.far_end = path.end;
  return report;
}

}  // namespace edgecolor
