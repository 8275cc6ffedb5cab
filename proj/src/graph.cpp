#include "edgecolor/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace edgecolor {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw ContractError("negative vertex count");
  std::vector<int> degree(n, 0);
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw ContractError("edge endpoint out of range");
    if (e.u == e.v) throw ContractError("self-loop at vertex " + std::to_string(e.u));
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < num_edges(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[fill[e.u]++] = {e.v, id};
    adjacency_[fill[e.v]++] = {e.u, id};
  }
  max_degree_ = n > 0 ? *std::max_element(degree.begin(), degree.end()) : 0;

  std::vector<int> copies(n, 0);
  std::vector<Vertex> stamp(n, kNoVertex);
  max_multiplicity_ = edges_.empty() ? 0 : 1;
  for (Vertex u = 0; u < n; ++u) {
    for (const Incidence& inc : incident(u)) {
      if (stamp[inc.neighbor] != u) {
        stamp[inc.neighbor] = u;
        copies[inc.neighbor] = 0;
      }
      max_multiplicity_ = std::max(max_multiplicity_, ++copies[inc.neighbor]);
    }
  }
}

void Graph::set_labels(std::vector<int64_t> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_) throw ContractError("label table size mismatch");
  labels_ = std::move(labels);
}

void Graph::set_parent_ids(std::vector<Vertex> vertices, std::vector<EdgeId> edges) {
  if (!vertices.empty() && static_cast<int>(vertices.size()) != n_) throw ContractError("parent vertex map size");
  if (!edges.empty() && static_cast<int>(edges.size()) != num_edges()) throw ContractError("parent edge map size");
  parent_vertices_ = std::move(vertices);
  parent_edges_ = std::move(edges);
}

namespace {

std::string_view trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int64_t parse_label(std::string_view tok, int line) {
  int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

Graph parse_edge_list(std::istream& in) {
  std::unordered_map<int64_t, Vertex> index;
  std::vector<int64_t> labels;
  std::vector<Edge> edges;
  auto intern = [&](int64_t label) {
    auto [it, inserted] = index.try_emplace(label, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s(raw);
    if (size_t hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    auto tok = tokens(s);
    if (tok.size() != 2) throw ParseError(line, "expected two vertex labels");
    int64_t a = parse_label(tok[0], line);
    int64_t b = parse_label(tok[1], line);
    if (a == b) throw ParseError(line, "self-loop on vertex " + std::to_string(a));
    Vertex u = intern(a);
    Vertex v = intern(b);
    edges.push_back({u, v});
  }
  Graph g(static_cast<int>(labels.size()), std::move(edges));
  g.set_labels(std::move(labels));
  return g;
}

Graph parse_dimacs(std::istream& in) {
  std::string raw;
  int line = 0;
  int64_t n = -1;
  int64_t m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = trim(raw);
    if (s.empty() || s[0] == 'c' || s[0] == '#') continue;
    auto tok = tokens(s);
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError(line, "duplicate problem line");
      if (tok.size() != 4) throw ParseError(line, "expected 'p edge <n> <m>'");
      n = parse_label(tok[2], line);
      m = parse_label(tok[3], line);
      if (n > INT32_MAX) throw ParseError(line, "vertex count too large");
      edges.reserve(static_cast<size_t>(m));
    } else if (tok[0] == "e") {
      if (n < 0) throw ParseError(line, "edge before problem line");
      if (tok.size() != 3) throw ParseError(line, "expected 'e <u> <v>'");
      int64_t a = parse_label(tok[1], line);
      int64_t b = parse_label(tok[2], line);
      if (a < 1 || b < 1 || a > n || b > n) throw ParseError(line, "vertex out of range 1.." + std::to_string(n));
      if (a == b) throw ParseError(line, "self-loop on vertex " + std::to_string(a));
      edges.push_back({static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1)});
    } else {
      throw ParseError(line, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (n < 0) throw ParseError(line, "missing problem line");
  if (static_cast<int64_t>(edges.size()) != m) {
    throw ParseError(line, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  std::vector<int64_t> labels(n);
  std::iota(labels.begin(), labels.end(), int64_t{1});
  Graph g(static_cast<int>(n), std::move(edges));
  g.set_labels(std::move(labels));
  return g;
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::dimacs ? parse_dimacs(in) : parse_edge_list(in);
}

Graph parse_graph(const std::string& text, GraphFormat format) {
  std::istringstream in(text);
  return parse_graph(in, format);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  GraphFormat format = GraphFormat::edge_list;
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".dimacs") || ends_with(".col") || ends_with(".clq")) {
    format = GraphFormat::dimacs;
  } else {
    std::istringstream probe(content);
    std::string raw;
    while (std::getline(probe, raw)) {
      std::string_view s = trim(raw);
      if (s.empty() || s[0] == '#' || s[0] == 'c') continue;
      if (s[0] == 'p') format = GraphFormat::dimacs;
      break;
    }
  }
  return parse_graph(content, format);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

Graph induced_by_edges(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<Vertex> local(g.num_vertices(), kNoVertex);
  std::vector<Vertex> parent_vertices;
  std::vector<Edge> out;
  out.reserve(edges.size());
  auto map = [&](Vertex x) {
    if (local[x] == kNoVertex) {
      local[x] = static_cast<Vertex>(parent_vertices.size());
      parent_vertices.push_back(x);
    }
    return local[x];
  };
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    Vertex a = map(ed.u);
    Vertex b = map(ed.v);
    out.push_back({a, b});
  }
  std::vector<int64_t> labels;
  labels.reserve(parent_vertices.size());
  for (Vertex x : parent_vertices) labels.push_back(g.label(x));
  Graph sub(static_cast<int>(parent_vertices.size()), std::move(out));
  sub.set_labels(std::move(labels));
  sub.set_parent_ids(std::move(parent_vertices), std::vector<EdgeId>(edges.begin(), edges.end()));
  return sub;
}

namespace {

// Hierholzer on an edge subset plus virtual edges; returns the edge sequence of
// the closed walk from `start` that uses every unused edge of its component.
class TourWalker {
 public:
  TourWalker(int vertices, const std::vector<Edge>& edges) : used_(edges.size(), 0), range_(vertices) {
    for (const Edge& e : edges) {
      ++range_[e.u].end;
      ++range_[e.v].end;
    }
    int total = 0;
    for (Range& r : range_) {
      r.cursor = total;
      total += r.end;
      r.end = r.cursor;
    }
    adjacency_.resize(total);
    for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
      adjacency_[range_[edges[id].u].end++] = {edges[id].v, id};
      adjacency_[range_[edges[id].v].end++] = {edges[id].u, id};
    }
  }

  bool has_unused(Vertex v) { return advance(v); }

  void tour(Vertex start, std::vector<int>& out) {
    out.clear();
    stack_.assign(1, {start, -1});
    while (!stack_.empty()) {
      Vertex v = stack_.back().neighbor;
      if (advance(v)) {
        Slot next = adjacency_[range_[v].cursor++];
        used_[next.id] = 1;
        stack_.push_back(next);
      } else {
        if (stack_.back().id >= 0) out.push_back(stack_.back().id);
        stack_.pop_back();
      }
    }
  }

 private:
  struct Slot {
    Vertex neighbor;
    int id;
  };
  struct Range {
    int cursor = 0;
    int end = 0;
  };

  bool advance(Vertex v) {
    Range& r = range_[v];
    while (r.cursor < r.end && used_[adjacency_[r.cursor].id]) ++r.cursor;
    return r.cursor < r.end;
  }

  std::vector<uint8_t> used_;
  std::vector<Range> range_;
  std::vector<Slot> adjacency_;
  std::vector<Slot> stack_;
};

}  // namespace

std::vector<int8_t> euler_sides(const Graph& g) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  std::vector<int8_t> side(m, -1);

  // Parallel copies are split evenly first so that multiplicities halve too.
  std::vector<int> copies(n, 0);
  std::vector<int> seen_copies(n, 0);
  std::vector<Vertex> stamp(n, kNoVertex);
  std::vector<char> leftover(m, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (const Incidence& inc : g.incident(u)) {
      if (inc.neighbor < u) continue;
      if (stamp[inc.neighbor] != u) {
        stamp[inc.neighbor] = u;
        copies[inc.neighbor] = 0;
        seen_copies[inc.neighbor] = 0;
      }
      ++copies[inc.neighbor];
    }
    for (const Incidence& inc : g.incident(u)) {
      if (inc.neighbor < u) continue;
      int t = seen_copies[inc.neighbor]++;
      if (t < copies[inc.neighbor] / 2 * 2) {
        side[inc.edge] = static_cast<int8_t>(t % 2);
      } else {
        leftover[inc.edge] = 1;
      }
    }
  }
  std::vector<EdgeId> residual;
  for (EdgeId e = 0; e < m; ++e) {
    if (leftover[e]) residual.push_back(e);
  }

  std::vector<int> degree(n, 0);
  std::vector<Edge> walk_edges;
  walk_edges.reserve(residual.size() + n);
  for (EdgeId e : residual) {
    walk_edges.push_back(g.edge(e));
    ++degree[g.edge(e).u];
    ++degree[g.edge(e).v];
  }
  const int real = static_cast<int>(walk_edges.size());
  const Vertex hub = n;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] % 2 == 1) walk_edges.push_back({hub, v});
  }
  TourWalker walker(n + 1, walk_edges);

  std::vector<int> tour;
  auto assign = [&] {
    int parity = 0;
    for (int id : tour) {
      if (id >= real) continue;
      side[residual[id]] = static_cast<int8_t>(parity);
      parity ^= 1;
    }
  };
  if (walker.has_unused(hub)) {
    walker.tour(hub, tour);
    assign();
  }

  // Remaining components have only even degrees. A closed tour of odd length
  // gives its start vertex one extra edge on side 0, so start at a vertex of
  // minimum degree.
  std::vector<int8_t> seen(n, 0);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (seen[v] || degree[v] == 0 || !walker.has_unused(v)) continue;
    queue.assign(1, v);
    seen[v] = 1;
    Vertex best = v;
    for (size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      if (g.degree(x) < g.degree(best) || (g.degree(x) == g.degree(best) && x < best)) best = x;
      for (const Incidence& inc : g.incident(x)) {
        if (side[inc.edge] >= 0) continue;
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = 1;
          queue.push_back(inc.neighbor);
        }
      }
    }
    walker.tour(best, tour);
    assign();
  }

  return side;
}

std::pair<Graph, Graph> euler_partition(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int8_t> side = euler_sides(g);
  std::vector<Edge> part[2];
  std::vector<EdgeId> parents[2];
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    int s = side[e];
    part[s].push_back(g.edge(e));
    parents[s].push_back(e);
  }
  Graph g1(n, std::move(part[0]));
  Graph g2(n, std::move(part[1]));
  std::vector<int64_t> labels;
  labels.reserve(n);
  for (Vertex v = 0; v < n; ++v) labels.push_back(g.label(v));
  g1.set_labels(labels);
  g2.set_labels(std::move(labels));
  g1.set_parent_ids({}, std::move(parents[0]));
  g2.set_parent_ids({}, std::move(parents[1]));
  return {std::move(g1), std::move(g2)};
}

bool is_bipartite(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int8_t> side(n, -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (const Incidence& inc : g.incident(x)) {
        if (side[inc.neighbor] < 0) {
          side[inc.neighbor] = static_cast<int8_t>(1 - side[x]);
          queue.push_back(inc.neighbor);
        } else if (side[inc.neighbor] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

int count_components(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int8_t> seen(n, 0);
  std::vector<Vertex> queue;
  int count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s] || g.degree(s) == 0) continue;
    ++count;
    seen[s] = 1;
    queue.assign(1, s);
    for (size_t head = 0; head < queue.size(); ++head) {
      for (const Incidence& inc : g.incident(queue[head])) {
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = 1;
          queue.push_back(inc.neighbor);
        }
      }
    }
  }
  return count;
}

}  // namespace edgecolor
