#include "edgecolor/recursion.hpp"

#include <algorithm>

namespace edgecolor {

std::array<Graph, 2> split_graph(const Graph& g) {
  std::vector<int8_t> side = euler_sides(g);
  std::array<std::vector<EdgeId>, 2> ids;
  for (EdgeId e = 0; e < g.num_edges(); ++e) ids[side[e]].push_back(e);
  return {induced_by_edges(g, ids[0]), induced_by_edges(g, ids[1])};
}

MergedColoring merge_colorings(const Graph& g, const std::array<Graph, 2>& parts,
                               const std::array<std::vector<Color>, 2>& colors, int palette) {
  MergedColoring merged;
  merged.colors.assign(g.num_edges(), kUncolored);
  Color offset = 0;
  for (int s = 0; s < 2; ++s) {
    Color top = -1;
    for (EdgeId e = 0; e < parts[s].num_edges(); ++e) {
      Color c = colors[s][e];
      if (c == kUncolored) continue;
      merged.colors[parts[s].parent_edge(e)] = offset + c;
      top = std::max(top, c);
    }
    offset += top + 1;
  }

  std::vector<std::vector<EdgeId>> classes(offset);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (merged.colors[e] != kUncolored) classes[merged.colors[e]].push_back(e);
  }
  std::vector<Color> order;
  for (Color c = 0; c < offset; ++c) {
    if (!classes[c].empty()) order.push_back(c);
  }
  merged.colors_before = static_cast<int>(order.size());
  std::stable_sort(order.begin(), order.end(),
                   [&](Color a, Color b) { return classes[a].size() < classes[b].size(); });
  size_t excess = order.size() > static_cast<size_t>(palette) ? order.size() - palette : 0;
  std::vector<Color> renumber(offset, kUncolored);
  for (size_t i = 0; i < excess; ++i) merged.dropped.push_back(std::move(classes[order[i]]));
  std::sort(order.begin() + excess, order.end());
  Color next = 0;
  for (size_t i = excess; i < order.size(); ++i) renumber[order[i]] = next++;
  for (auto& c : merged.colors) {
    if (c != kUncolored) c = renumber[c];
  }
  return merged;
}

std::vector<Color> colors_of(const PartialColoring& chi) {
  std::vector<Color> out(chi.graph().num_edges());
  for (EdgeId e = 0; e < chi.graph().num_edges(); ++e) out[e] = chi.color_of(e);
  return out;
}

void apply_colors(PartialColoring& chi, std::span<const Color> colors) {
  for (EdgeId e = 0; e < static_cast<EdgeId>(colors.size()); ++e) {
    if (colors[e] != kUncolored) chi.set_color(e, colors[e]);
  }
}

}  // namespace edgecolor
