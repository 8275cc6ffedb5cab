#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "edgecolor/graph.hpp"

namespace edgecolor {

enum class ViolationKind { conflict, palette, uncolored };

struct Violation {
  ViolationKind kind = ViolationKind::conflict;
  Vertex vertex = kNoVertex;  // shared endpoint for conflicts
  Color color = kUncolored;
  EdgeId first = kNoEdge;
  EdgeId second = kNoEdge;  // conflicts only

  std::string describe(const Graph& g) const;
};

struct Verdict {
  bool proper = true;
  int colors_used = 0;
  int palette_bound = 0;
  bool palette_ok = true;
  int uncolored = 0;
  std::vector<Violation> violations;

  bool complete() const { return uncolored == 0; }
  bool ok() const { return proper && palette_ok && complete(); }
};

// O(m) audit of `colors` (one entry per edge of g) against a palette of
// `palette_bound` colors 0..bound-1; bound <= 0 skips the palette check.
Verdict validate_coloring(const Graph& g, std::span<const Color> colors, int palette_bound = 0);

int count_colors_used(std::span<const Color> colors);

// "colors K" then "edge_id u v color" per edge, u and v as input labels.
void write_coloring(std::ostream& out, const Graph& g, std::span<const Color> colors);
std::string coloring_to_string(const Graph& g, std::span<const Color> colors);
// Throws ParseError when lines are malformed or ids and endpoints disagree with g.
std::vector<Color> read_coloring(std::istream& in, const Graph& g);
std::vector<Color> load_coloring(const std::string& path, const Graph& g);

}  // namespace edgecolor
