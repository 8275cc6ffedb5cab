#pragma once

#include <cstdint>
#include <string>

#include "edgecolor/graph.hpp"

namespace edgecolor {

enum class GraphKind {
  gnm,                 // n, m
  random_regular,      // n, d
  complete,            // n
  complete_bipartite,  // a, b
  cycle,               // n
  shannon_triangle,    // mu
  path,                // n
  star,                // n leaves
  grid,                // rows, cols
  petersen,
  random_bipartite,    // a, b, m
  random_multigraph,   // n, m distinct pairs, mu
};

struct GenParams {
  int n = 0;
  int64_t m = 0;
  int d = 0;
  int a = 0;
  int b = 0;
  int mu = 1;
  int rows = 0;
  int cols = 0;
};

GraphKind parse_graph_kind(const std::string& name);
std::string to_string(GraphKind kind);

Graph generate(GraphKind kind, const GenParams& params, uint64_t seed = 0);

}  // namespace edgecolor
