#include "edgecolor/validate.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "edgecolor/vertex_color_table.hpp"

namespace edgecolor {

std::string Violation::describe(const Graph& g) const {
  std::ostringstream out;
  switch (kind) {
    case ViolationKind::conflict:
      out << "edges " << first << " and " << second << " share color " << color << " at vertex " << g.label(vertex);
      break;
    case ViolationKind::palette:
      out << "edge " << first << " has color " << color << " outside the palette";
      break;
    case ViolationKind::uncolored:
      out << "edge " << first << " is uncolored";
      break;
  }
  return out.str();
}

int count_colors_used(std::span<const Color> colors) {
  std::vector<char> seen;
  int used = 0;
  for (Color c : colors) {
    if (c < 0) continue;
    if (static_cast<size_t>(c) >= seen.size()) seen.resize(c + 1, 0);
    if (!seen[c]) {
      seen[c] = 1;
      ++used;
    }
  }
  return used;
}

Verdict validate_coloring(const Graph& g, std::span<const Color> colors, int palette_bound) {
  if (static_cast<int>(colors.size()) != g.num_edges()) {
    throw ContractError("coloring has " + std::to_string(colors.size()) + " entries for " +
                        std::to_string(g.num_edges()) + " edges");
  }
  Verdict verdict;
  verdict.palette_bound = palette_bound;
  verdict.colors_used = count_colors_used(colors);
#ifdef EDGECOLOR_ORDERED_MAPS
  std::map<uint64_t, EdgeId> holder;
#else
  absl::flat_hash_map<uint64_t, EdgeId> holder;
#endif
  holder.reserve(2 * colors.size());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    Color c = colors[e];
    if (c == kUncolored) {
      ++verdict.uncolored;
      verdict.violations.push_back({ViolationKind::uncolored, kNoVertex, c, e, kNoEdge});
      continue;
    }
    if (c < 0 || (palette_bound > 0 && c >= palette_bound)) {
      verdict.palette_ok = false;
      verdict.violations.push_back({ViolationKind::palette, kNoVertex, c, e, kNoEdge});
    }
    for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
      uint64_t key = (static_cast<uint64_t>(static_cast<uint32_t>(x)) << 32) | static_cast<uint32_t>(c);
      auto [it, fresh] = holder.emplace(key, e);
      if (!fresh) {
        verdict.proper = false;
        verdict.violations.push_back({ViolationKind::conflict, x, c, it->second, e});
      }
    }
  }
  return verdict;
}

void write_coloring(std::ostream& out, const Graph& g, std::span<const Color> colors) {
  out << "colors " << count_colors_used(colors) << '\n';
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out << e << ' ' << g.label(g.edge(e).u) << ' ' << g.label(g.edge(e).v) << ' ' << colors[e] << '\n';
  }
}

std::string coloring_to_string(const Graph& g, std::span<const Color> colors) {
  std::ostringstream out;
  write_coloring(out, g, colors);
  return out.str();
}

std::vector<Color> read_coloring(std::istream& in, const Graph& g) {
  std::vector<Color> colors(g.num_edges(), kUncolored);
  std::vector<char> seen(g.num_edges(), 0);
  std::string line;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first[0] == '#') continue;
    if (!header) {
      long long declared = 0;
      if (first != "colors" || !(fields >> declared)) throw ParseError(line_no, "expected header 'colors K'");
      header = true;
      continue;
    }
    long long id = 0;
    long long u = 0;
    long long v = 0;
    long long c = 0;
    std::istringstream row(line);
    std::string rest;
    if (!(row >> id >> u >> v >> c) || (row >> rest)) throw ParseError(line_no, "expected 'edge_id u v color'");
    if (id < 0 || id >= g.num_edges()) throw ParseError(line_no, "edge id " + std::to_string(id) + " out of range");
    const Edge& ed = g.edge(static_cast<EdgeId>(id));
    long long lu = g.label(ed.u);
    long long lv = g.label(ed.v);
    if (!((u == lu && v == lv) || (u == lv && v == lu))) {
      throw ParseError(line_no, "endpoints of edge " + std::to_string(id) + " do not match the graph");
    }
    if (seen[id]) throw ParseError(line_no, "edge id " + std::to_string(id) + " repeated");
    if (c < -1 || c > std::numeric_limits<Color>::max()) throw ParseError(line_no, "bad color");
    seen[id] = 1;
    colors[id] = static_cast<Color>(c);
  }
  if (!header) throw ParseError(line_no, "missing header 'colors K'");
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!seen[e]) throw ParseError(line_no, "edge id " + std::to_string(e) + " missing");
  }
  return colors;
}

std::vector<Color> load_coloring(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_coloring(in, g);
}

}  // namespace edgecolor
