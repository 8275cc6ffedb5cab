#pragma once

#include <array>
#include <vector>

#include "edgecolor/coloring.hpp"
#include "edgecolor/graph.hpp"

namespace edgecolor {

// Euler split of g into two compacted subgraphs whose parent ids refer to g.
std::array<Graph, 2> split_graph(const Graph& g);

struct MergedColoring {
  std::vector<Color> colors;  // per edge of g, renumbered to [0, palette)
  std::vector<std::vector<EdgeId>> dropped;  // uncolored classes, each a matching
  int colors_before = 0;  // nonempty classes before trimming
};

// Offsets the second part's colors past the first, then uncolors the smallest
// classes until at most `palette` remain.
MergedColoring merge_colorings(const Graph& g, const std::array<Graph, 2>& parts,
                               const std::array<std::vector<Color>, 2>& colors, int palette);

std::vector<Color> colors_of(const PartialColoring& chi);
void apply_colors(PartialColoring& chi, std::span<const Color> colors);

}  // namespace edgecolor
