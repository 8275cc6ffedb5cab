#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgecolor/types.hpp"

namespace edgecolor {

struct Edge {
  Vertex u;
  Vertex v;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

// Immutable multigraph with dense vertex ids and stable edge ids 0..m-1.
// Subgraphs record the ids of the graph they were extracted from.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Incidence> incident(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  Vertex other(EdgeId e, Vertex x) const { return edges_[e].u == x ? edges_[e].v : edges_[e].u; }

  int max_degree() const { return max_degree_; }
  int max_multiplicity() const { return max_multiplicity_; }
  bool is_multigraph() const { return max_multiplicity_ > 1; }

  // Original vertex labels used for input/output.
  int64_t label(Vertex v) const { return labels_.empty() ? v : labels_[v]; }
  void set_labels(std::vector<int64_t> labels);

  // Identity when this graph is not a subgraph.
  EdgeId parent_edge(EdgeId e) const { return parent_edges_.empty() ? e : parent_edges_[e]; }
  Vertex parent_vertex(Vertex v) const { return parent_vertices_.empty() ? v : parent_vertices_[v]; }
  void set_parent_ids(std::vector<Vertex> vertices, std::vector<EdgeId> edges);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Incidence> adjacency_;
  int max_degree_ = 0;
  int max_multiplicity_ = 0;
  std::vector<int64_t> labels_;
  std::vector<Vertex> parent_vertices_;
  std::vector<EdgeId> parent_edges_;
};

enum class GraphFormat { edge_list, dimacs };

Graph parse_graph(std::istream& in, GraphFormat format = GraphFormat::edge_list);
Graph parse_graph(const std::string& text, GraphFormat format = GraphFormat::edge_list);
Graph load_graph(const std::string& path);  // format from extension (.dimacs/.col) or content
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

// Subgraph on the vertices touched by `edges`, re-indexed densely.
Graph induced_by_edges(const Graph& g, std::span<const EdgeId> edges);

// Split along Eulerian tours so each side gets about half of every vertex's degree.
std::pair<Graph, Graph> euler_partition(const Graph& g);
// Side (0 or 1) of every edge in that split.
std::vector<int8_t> euler_sides(const Graph& g);

bool is_bipartite(const Graph& g);
int count_components(const Graph& g);  // ignores isolated vertices

}  // namespace edgecolor
