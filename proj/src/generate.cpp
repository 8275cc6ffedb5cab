#include "edgecolor/generate.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "edgecolor/rng.hpp"

namespace edgecolor {

namespace {

uint64_t pair_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw GenerateError(message);
}

std::vector<Edge> sample_pairs(int n, int64_t m, Rng& rng) {
  const int64_t total = static_cast<int64_t>(n) * (n - 1) / 2;
  require(n >= 0 && m >= 0 && m <= total, "gnm: need 0 <= m <= n(n-1)/2");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  if (m * 2 <= total) {
    std::unordered_set<uint64_t> seen;
    seen.reserve(static_cast<size_t>(m) * 2);
    while (static_cast<int64_t>(edges.size()) < m) {
      auto a = static_cast<Vertex>(rng.below(n));
      auto b = static_cast<Vertex>(rng.below(n));
      if (a == b || !seen.insert(pair_key(a, b)).second) continue;
      edges.push_back({a, b});
    }
  } else {
    std::vector<Edge> all;
    all.reserve(static_cast<size_t>(total));
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) all.push_back({a, b});
    }
    for (int64_t i = 0; i < m; ++i) {
      auto j = static_cast<size_t>(i) + rng.below(all.size() - i);
      std::swap(all[i], all[j]);
      edges.push_back(all[i]);
    }
  }
  return edges;
}

std::vector<Edge> complete_edges(int n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  return edges;
}

// Configuration model followed by random double-edge switches that remove
// loops and repeated pairs.
std::vector<Edge> random_regular_edges(int n, int d, Rng& rng) {
  require(n > 0 && d >= 0 && d < n, "random_regular: need 0 <= d < n");
  require(static_cast<int64_t>(n) * d % 2 == 0, "random_regular: n*d must be even");
  if (d == n - 1) return complete_edges(n);
  std::vector<Vertex> stubs;
  stubs.reserve(static_cast<size_t>(n) * d);
  for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
  rng.shuffle(std::span<Vertex>(stubs));
  std::vector<Edge> edges;
  edges.reserve(stubs.size() / 2);
  for (size_t i = 0; i + 1 < stubs.size(); i += 2) edges.push_back({stubs[i], stubs[i + 1]});

  std::unordered_map<uint64_t, int> count;
  count.reserve(edges.size() * 2);
  std::vector<size_t> bad;
  for (size_t i = 0; i < edges.size(); ++i) {
    int& c = count[pair_key(edges[i].u, edges[i].v)];
    if (edges[i].u == edges[i].v || c > 0) bad.push_back(i);
    ++c;
  }
  auto present = [&](Vertex a, Vertex b) {
    auto it = count.find(pair_key(a, b));
    return it != count.end() && it->second > 0;
  };
  auto is_bad = [&](size_t i) {
    return edges[i].u == edges[i].v || count[pair_key(edges[i].u, edges[i].v)] > 1;
  };
  for (size_t i : bad) {
    int attempts = 0;
    while (is_bad(i)) {
      require(++attempts < 100000, "random_regular: could not repair pairing");
      size_t j = rng.below(edges.size());
      if (j == i || is_bad(j)) continue;
      Vertex a = edges[i].u, b = edges[i].v, c = edges[j].u, e = edges[j].v;
      if (rng.below(2) == 1) std::swap(c, e);
      if (a == c || b == e || present(a, c) || present(b, e) || pair_key(a, c) == pair_key(b, e)) continue;
      --count[pair_key(a, b)];
      --count[pair_key(edges[j].u, edges[j].v)];
      ++count[pair_key(a, c)];
      ++count[pair_key(b, e)];
      edges[i] = {a, c};
      edges[j] = {b, e};
    }
  }
  return edges;
}

}  // namespace

GraphKind parse_graph_kind(const std::string& name) {
  static const std::pair<const char*, GraphKind> names[] = {
      {"gnm", GraphKind::gnm},
      {"random_regular", GraphKind::random_regular},
      {"complete", GraphKind::complete},
      {"complete_bipartite", GraphKind::complete_bipartite},
      {"cycle", GraphKind::cycle},
      {"shannon_triangle", GraphKind::shannon_triangle},
      {"path", GraphKind::path},
      {"star", GraphKind::star},
      {"grid", GraphKind::grid},
      {"petersen", GraphKind::petersen},
      {"random_bipartite", GraphKind::random_bipartite},
      {"random_multigraph", GraphKind::random_multigraph},
  };
  for (const auto& [key, kind] : names) {
    if (name == key) return kind;
  }
  throw GenerateError("unknown graph kind '" + name + "'");
}

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::gnm: return "gnm";
    case GraphKind::random_regular: return "random_regular";
    case GraphKind::complete: return "complete";
    case GraphKind::complete_bipartite: return "complete_bipartite";
    case GraphKind::cycle: return "cycle";
    case GraphKind::shannon_triangle: return "shannon_triangle";
    case GraphKind::path: return "path";
    case GraphKind::star: return "star";
    case GraphKind::grid: return "grid";
    case GraphKind::petersen: return "petersen";
    case GraphKind::random_bipartite: return "random_bipartite";
    case GraphKind::random_multigraph: return "random_multigraph";
  }
  return "unknown";
}

Graph generate(GraphKind kind, const GenParams& p, uint64_t seed) {
  Rng rng(seed, 0x67656e00ULL + static_cast<uint64_t>(kind));
  switch (kind) {
    case GraphKind::gnm:
      return Graph(p.n, sample_pairs(p.n, p.m, rng));
    case GraphKind::random_regular:
      return Graph(p.n, random_regular_edges(p.n, p.d, rng));
    case GraphKind::complete:
      require(p.n >= 0, "complete: n must be non-negative");
      return Graph(p.n, complete_edges(p.n));
    case GraphKind::complete_bipartite: {
      require(p.a >= 0 && p.b >= 0, "complete_bipartite: sides must be non-negative");
      std::vector<Edge> edges;
      for (Vertex x = 0; x < p.a; ++x) {
        for (Vertex y = 0; y < p.b; ++y) edges.push_back({x, p.a + y});
      }
      return Graph(p.a + p.b, std::move(edges));
    }
    case GraphKind::cycle: {
      require(p.n >= 3, "cycle: need n >= 3");
      std::vector<Edge> edges;
      for (Vertex v = 0; v < p.n; ++v) edges.push_back({v, (v + 1) % p.n});
      return Graph(p.n, std::move(edges));
    }
    case GraphKind::shannon_triangle: {
      require(p.mu >= 1, "shannon_triangle: need mu >= 1");
      std::vector<Edge> edges;
      for (int copy = 0; copy < p.mu; ++copy) {
        edges.push_back({0, 1});
        edges.push_back({1, 2});
        edges.push_back({2, 0});
      }
      return Graph(3, std::move(edges));
    }
    case GraphKind::path: {
      require(p.n >= 1, "path: need n >= 1");
      std::vector<Edge> edges;
      for (Vertex v = 0; v + 1 < p.n; ++v) edges.push_back({v, v + 1});
      return Graph(p.n, std::move(edges));
    }
    case GraphKind::star: {
      require(p.n >= 0, "star: leaf count must be non-negative");
      std::vector<Edge> edges;
      for (Vertex v = 1; v <= p.n; ++v) edges.push_back({0, v});
      return Graph(p.n + 1, std::move(edges));
    }
    case GraphKind::grid: {
      require(p.rows >= 1 && p.cols >= 1, "grid: need rows, cols >= 1");
      std::vector<Edge> edges;
      auto id = [&](int r, int c) { return static_cast<Vertex>(r * p.cols + c); };
      for (int r = 0; r < p.rows; ++r) {
        for (int c = 0; c < p.cols; ++c) {
          if (c + 1 < p.cols) edges.push_back({id(r, c), id(r, c + 1)});
          if (r + 1 < p.rows) edges.push_back({id(r, c), id(r + 1, c)});
        }
      }
      return Graph(p.rows * p.cols, std::move(edges));
    }
    case GraphKind::petersen: {
      std::vector<Edge> edges;
      for (Vertex i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({i + 5, (i + 2) % 5 + 5});
      }
      return Graph(10, std::move(edges));
    }
    case GraphKind::random_bipartite: {
      const int64_t total = static_cast<int64_t>(p.a) * p.b;
      require(p.a >= 0 && p.b >= 0 && p.m >= 0 && p.m <= total, "random_bipartite: need m <= a*b");
      std::vector<Edge> edges;
      std::unordered_set<uint64_t> seen;
      if (p.m * 2 <= total) {
        while (static_cast<int64_t>(edges.size()) < p.m) {
          auto x = static_cast<Vertex>(rng.below(p.a));
          auto y = static_cast<Vertex>(p.a + rng.below(p.b));
          if (seen.insert(pair_key(x, y)).second) edges.push_back({x, y});
        }
      } else {
        std::vector<Edge> all;
        for (Vertex x = 0; x < p.a; ++x) {
          for (Vertex y = 0; y < p.b; ++y) all.push_back({x, p.a + y});
        }
        rng.shuffle(std::span<Edge>(all));
        all.resize(static_cast<size_t>(p.m));
        edges = std::move(all);
      }
      return Graph(p.a + p.b, std::move(edges));
    }
    case GraphKind::random_multigraph: {
      require(p.mu >= 1, "random_multigraph: need mu >= 1");
      std::vector<Edge> pairs = sample_pairs(p.n, p.m, rng);
      std::vector<Edge> edges;
      for (size_t i = 0; i < pairs.size(); ++i) {
        int copies = i == 0 ? p.mu : 1 + static_cast<int>(rng.below(p.mu));
        for (int c = 0; c < copies; ++c) edges.push_back(pairs[i]);
      }
      rng.shuffle(std::span<Edge>(edges));
      return Graph(p.n, std::move(edges));
    }
  }
  throw GenerateError("unhandled graph kind");
}

}  // namespace edgecolor
