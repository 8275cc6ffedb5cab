#include <doctest.h>

#include "edgecolor/bipartite.hpp"
#include "support.hpp"

using namespace edgecolor;
using testing::gen;
using testing::make_graph;

namespace {

Graph kdd(int d) {
  GenParams p;
  p.a = d;
  p.b = d;
  return gen(GraphKind::complete_bipartite, p);
}

Graph random_bipartite(int side, int64_t m, uint64_t seed) {
  GenParams p;
  p.a = side;
  p.b = side;
  p.m = m;
  return gen(GraphKind::random_bipartite, p, seed);
}

// Every edge outside one maximal matching colored by Konig steps; returns the matching.
std::vector<EdgeId> color_all_but_matching(PartialColoring& chi) {
  const Graph& g = chi.graph();
  std::vector<char> used(g.num_vertices(), 0);
  std::vector<EdgeId> matching;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!used[g.edge(e).u] && !used[g.edge(e).v]) {
      used[g.edge(e).u] = used[g.edge(e).v] = 1;
      matching.push_back(e);
    }
  }
  std::vector<char> skip(g.num_edges(), 0);
  for (EdgeId e : matching) skip[e] = 1;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!skip[e]) konig_extend(chi, e);
  }
  return matching;
}

}  // namespace

TEST_CASE("extension on an empty matching") {
  Graph g = kdd(3);
  PartialColoring chi(g, 3);
  RunEnv env;
  Rng rng(1);
  std::vector<EdgeId> none;
  CHECK(bipartite_extension(chi, none, rng, env) == 0);
  CHECK(chi.uncolored_count() == g.num_edges());
}

TEST_CASE("extension colors a single edge whose endpoints share a color") {
  Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  PartialColoring chi(g, 2);
  chi.set_color(0, 0);
  chi.set_color(2, 0);
  RunEnv env;
  Rng rng(1);
  std::vector<EdgeId> one{1};
  CHECK(bipartite_extension(chi, one, rng, env) == 1);
  CHECK(chi.color_of(1) == 1);
}

TEST_CASE("extension on a leftover matching stays within delta colors") {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = random_bipartite(60, 400, seed);
    PartialColoring chi(g, g.max_degree());
    std::vector<EdgeId> matching = color_all_but_matching(chi);
    RunEnv env(Options{.debug = true, .seed = seed});
    Rng rng(seed);
    int total = 0;
    std::vector<EdgeId> remaining = matching;
    while (!remaining.empty()) {
      int colored = bipartite_extension(chi, remaining, rng, env);
      REQUIRE(colored > 0);
      total += colored;
      std::erase_if(remaining, [&](EdgeId e) { return chi.is_colored(e); });
    }
    CHECK(total == static_cast<int>(matching.size()));
    chi.audit();
    CHECK(testing::proper_within(chi, g.max_degree()));
    CHECK(env.stats().get(Counter::bipartite_forloop_violations) == 0);
    CHECK(env.stats().get(Counter::bipartite_successes) <= env.stats().get(Counter::bipartite_iterations));
  }
}

TEST_CASE("konig step detects odd cycles") {
  Graph c3 = gen(GraphKind::cycle, testing::with_n(3));
  PartialColoring chi(c3, 2);
  chi.set_color(0, 0);
  chi.set_color(1, 1);
  CHECK_THROWS_AS(konig_extend(chi, 2), NotBipartiteError);
}

TEST_CASE("driver on complete bipartite graphs") {
  for (int d : {1, 2, 3, 4, 7, 16, 33, 64}) {
    Graph g = kdd(d);
    for (uint64_t seed : {1, 2}) {
      RunEnv env(Options{.seed = seed});
      PartialColoring chi = bipartite_delta_color(g, env);
      Verdict v = validate_coloring(g, colors_of(chi), d);
      CHECK(v.ok());
      CHECK(v.colors_used == d);
    }
  }
}

TEST_CASE("driver on even cycles") {
  for (int n = 4; n <= 40; n += 2) {
    RunEnv env;
    Graph g = gen(GraphKind::cycle, testing::with_n(n));
    PartialColoring chi = bipartite_delta_color(g, env);
    Verdict v = validate_coloring(g, colors_of(chi), 2);
    CHECK(v.ok());
    CHECK(v.colors_used == 2);
  }
}

TEST_CASE("driver on random bipartite graphs") {
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    Graph g = random_bipartite(100, 600, seed);
    RunEnv env(Options{.debug = seed <= 5, .seed = seed});
    PartialColoring chi = bipartite_delta_color(g, env);
    CHECK(testing::proper_within(chi, g.max_degree()));
  }
  Graph big = random_bipartite(500, 8000, 3);
  RunEnv env(Options{.debug = true, .seed = 3});
  PartialColoring chi = bipartite_delta_color(big, env);
  CHECK(testing::proper_within(chi, big.max_degree()));
  CHECK(env.stats().get(Counter::merges) > 0);
  CHECK(env.stats().get(Counter::merge_bound_violations) == 0);
}

TEST_CASE("driver rejects odd cycles before any work") {
  RunEnv env;
  CHECK_THROWS_AS(bipartite_delta_color(gen(GraphKind::cycle, testing::with_n(7)), env), NotBipartiteError);
  CHECK(env.stats().get(Counter::bipartite_calls) == 0);
}
