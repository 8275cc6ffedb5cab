#include <doctest.h>

#include "edgecolor/ufan_construction.hpp"
#include "support.hpp"

using namespace edgecolor;
using testing::gen;
using testing::make_graph;

namespace {

void check_collection(const PartialColoring& chi, const SeparableCollection& U) {
  U.audit();
  for (Handle h : U.handles()) {
    CHECK(U.get(h).is_fan());
    CHECK(U.is_valid(h));
  }
}

}  // namespace

TEST_CASE("construct on no edges") {
  Graph g = gen(GraphKind::cycle, testing::with_n(5));
  PartialColoring chi(g, 3);
  SeparableCollection U(chi);
  RunEnv env;
  std::vector<EdgeId> none;
  ConstructOutcome out = construct_u_fans(chi, none, U, 1, env);
  CHECK(out.colored == 0);
  CHECK(out.ufans == 0);
  CHECK(U.empty());
}

TEST_CASE("a single edge with a shared missing color is colored") {
  Graph g = make_graph(3, {{0, 1}, {1, 2}});
  PartialColoring chi(g, 3);
  chi.set_color(1, 0);
  SeparableCollection U(chi);
  RunEnv env(Options{.debug = true});
  std::vector<EdgeId> one{0};
  ConstructOutcome out = construct_u_fans(chi, one, U, 1, env);
  CHECK(out.colored == 1);
  CHECK(out.ufans == 0);
  CHECK(chi.uncolored_count() == 0);
  CHECK(testing::proper_within(chi, 3));
}

TEST_CASE("u-edges pick spare colors at their centers") {
  Graph g = gen(GraphKind::random_regular, testing::with_nd(200, 8), 4);
  PartialColoring chi = testing::with_uncolored_matching(g, 60, 4);
  SeparableCollection U(chi);
  RunEnv env(Options{.debug = true});
  UFanBuilder builder(chi, U, env, 1);
  std::vector<EdgeId> uncolored = chi.uncolored_edges();
  std::vector<Handle> handles = builder.create_u_edges(uncolored);
  CHECK(handles.size() == uncolored.size());
  for (Handle h : handles) {
    const UComponent& c = U.get(h);
    CHECK_FALSE(c.is_fan());
    CHECK(chi.is_missing(c.center, c.center_color));
  }
  U.audit();
}

TEST_CASE("pruning leaves vertex-disjoint avoiding fans") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = gen(GraphKind::gnm, testing::with_nm(150, 900), seed);
    PartialColoring chi = testing::with_uncolored_matching(g, testing::ceil_div(g.num_edges(), g.max_degree()), seed);
    SeparableCollection U(chi);
    RunEnv env(Options{.debug = true, .seed = seed});
    UFanBuilder builder(chi, U, env, 1);
    std::vector<EdgeId> uncolored = chi.uncolored_edges();
    std::vector<Handle> handles = builder.create_u_edges(uncolored);
    std::vector<std::vector<Handle>> by_color(chi.palette_size());
    for (Handle h : handles) by_color[U.get(h).center_color].push_back(h);
    for (Color alpha = 0; alpha < chi.palette_size(); ++alpha) {
      if (by_color[alpha].empty()) continue;
      builder.prune(alpha, by_color[alpha]);
      std::vector<int> owner(g.num_vertices(), -1);
      int alive = 0;
      for (size_t f = 0; f < builder.fans().size(); ++f) {
        const auto& fan = builder.fans()[f];
        if (!fan.alive) continue;
        ++alive;
        CHECK(fan_is_valid(chi, fan.fan));
        CHECK(fan.fan.primer == alpha);
        CHECK(U.contains(fan.u_edge));
        std::vector<Vertex> members{fan.fan.center};
        for (const FanLeaf& leaf : fan.fan.leaves) members.push_back(leaf.vertex);
        for (Vertex x : members) {
          CHECK(owner[x] == -1);
          owner[x] = static_cast<int>(f);
        }
      }
      CHECK(alive == builder.alive_fans());
      int primed = 0;
      for (Handle h : U.handles()) {
        if (!U.get(h).is_fan() && U.get(h).center_color == alpha) ++primed;
      }
      CHECK(primed == alive);
      U.audit();
      builder.reduce(alpha);
      int left = 0;
      for (Handle h : U.handles()) {
        if (!U.get(h).is_fan() && U.get(h).center_color == alpha) ++left;
      }
      CHECK(left <= alive / 2);
      CHECK(builder.alive_fans() == 0);
      chi.audit();
    }
    CHECK(env.stats().get(Counter::potential_violations) == 0);
  }
}

TEST_CASE("construction yield and potential over a corpus") {
  struct Case {
    GraphKind kind;
    GenParams params;
  };
  std::vector<Case> corpus;
  for (int i = 0; i < 4; ++i) {
    corpus.push_back({GraphKind::gnm, testing::with_nm(300, 2400)});
    corpus.push_back({GraphKind::random_regular, testing::with_nd(300, 7 + 2 * i)});
  }
  corpus.push_back({GraphKind::complete, testing::with_n(20)});
  GenParams grid;
  grid.rows = 12;
  grid.cols = 12;
  corpus.push_back({GraphKind::grid, grid});

  uint64_t seed = 0;
  for (const Case& c : corpus) {
    ++seed;
    Graph g = gen(c.kind, c.params, seed);
    const int lambda = testing::ceil_div(g.num_edges(), g.max_degree());
    PartialColoring chi = testing::with_uncolored_matching(g, lambda, seed);
    const int uncolored = chi.uncolored_count();
    SeparableCollection U(chi);
    RunEnv env(Options{.debug = true, .seed = seed});
    std::vector<EdgeId> edges = chi.uncolored_edges();
    ConstructOutcome out = construct_u_fans(chi, edges, U, 1, env);
    CHECK(out.colored + out.ufans >= testing::ceil_div(uncolored, 18));
    CHECK(out.colored == uncolored - chi.uncolored_count());
    CHECK(out.ufans == static_cast<int>(U.size()));
    check_collection(chi, U);
    chi.audit();
    CHECK(env.stats().get(Counter::construct_yield_violations) == 0);
    CHECK(env.stats().get(Counter::potential_violations) == 0);
    CHECK(env.stats().get(Counter::path_packing_violations) == 0);
    CHECK(env.stats().get(Counter::potential_checks) > 0);
  }
}

TEST_CASE("construction on multigraphs") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    GenParams p;
    p.n = 80;
    p.m = 300;
    p.mu = 2 + static_cast<int>(seed % 3);
    Graph g = gen(GraphKind::random_multigraph, p, seed);
    const int lambda = testing::ceil_div(g.num_edges(), g.max_degree());
    PartialColoring chi = testing::with_uncolored_matching(g, lambda, seed);
    const int uncolored = chi.uncolored_count();
    SeparableCollection U(chi);
    RunEnv env(Options{.debug = true, .seed = seed});
    std::vector<EdgeId> edges = chi.uncolored_edges();
    ConstructOutcome out = construct_u_fans(chi, edges, U, g.max_multiplicity(), env);
    CHECK(out.colored + out.ufans >= testing::ceil_div(uncolored, 18));
    check_collection(chi, U);
    chi.audit();
    CHECK(env.stats().get(Counter::potential_violations) == 0);
  }
}

TEST_CASE("parallel u-edges with the same color: one is colored") {
  Graph g = make_graph(4, {{0, 1}, {0, 1}, {0, 2}, {1, 3}});
  PartialColoring chi(g, 4);
  chi.set_color(2, 0);
  chi.set_color(3, 1);
  SeparableCollection U(chi);
  RunEnv env(Options{.debug = true});
  std::vector<EdgeId> pair{0, 1};
  ConstructOutcome out = construct_u_fans(chi, pair, U, 2, env);
  CHECK(out.colored >= 1);
  CHECK(testing::proper_within(chi, 4) == (chi.uncolored_count() == 0));
  chi.audit();
}
