#include <doctest.h>

#include <sstream>

#include "support.hpp"

using namespace edgecolor;
using testing::gen;
using testing::make_graph;

namespace {

// Closed tours of odd length (an odd cycle, say) cannot alternate perfectly, so
// `slack` vertices, one per such component, may exceed the bound by one.
void check_halves(const Graph& g, int slack = 0) {
  auto [g1, g2] = euler_partition(g);
  CHECK(g1.num_vertices() == g.num_vertices());
  CHECK(g2.num_vertices() == g.num_vertices());
  CHECK(g1.num_edges() + g2.num_edges() == g.num_edges());
  int diff = std::abs(g1.num_edges() - g2.num_edges());
  CHECK(diff <= count_components(g));

  std::vector<int> owner(g.num_edges(), 0);
  for (const Graph* part : {&g1, &g2}) {
    for (EdgeId e = 0; e < part->num_edges(); ++e) {
      EdgeId parent = part->parent_edge(e);
      REQUIRE(parent >= 0);
      REQUIRE(parent < g.num_edges());
      ++owner[parent];
      const Edge& mine = part->edge(e);
      const Edge& theirs = g.edge(parent);
      CHECK(std::minmax(mine.u, mine.v) == std::minmax(theirs.u, theirs.v));
    }
  }
  for (int c : owner) CHECK(c == 1);
  int over = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    int half = (g.degree(v) + 1) / 2;
    int most = std::max(g1.degree(v), g2.degree(v));
    CHECK(most <= half + 1);
    if (most > half) ++over;
  }
  CHECK(over <= slack);
}

}  // namespace

TEST_CASE("edge list parsing") {
  Graph p3 = parse_graph(std::string("0 1\n1 2\n"));
  CHECK(p3.num_vertices() == 3);
  CHECK(p3.num_edges() == 2);
  CHECK(p3.max_degree() == 2);
  CHECK(p3.max_multiplicity() == 1);
  CHECK_FALSE(p3.is_multigraph());

  Graph twin = parse_graph(std::string("0 1\n0 1\n"));
  CHECK(twin.num_vertices() == 2);
  CHECK(twin.num_edges() == 2);
  CHECK(twin.max_degree() == 2);
  CHECK(twin.max_multiplicity() == 2);
  CHECK(twin.is_multigraph());

  Graph labeled = parse_graph(std::string("# comment\n\n10 20\n 20   30 # trailing\n"));
  CHECK(labeled.num_vertices() == 3);
  CHECK(labeled.label(0) == 10);
  CHECK(labeled.label(2) == 30);
}

TEST_CASE("dimacs parsing") {
  Graph tri = parse_graph(std::string("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"), GraphFormat::dimacs);
  CHECK(tri.num_vertices() == 3);
  CHECK(tri.num_edges() == 3);
  CHECK(tri.max_degree() == 2);
  CHECK(tri.label(0) == 1);
}

TEST_CASE("malformed input reports the line") {
  try {
    parse_graph(std::string("0 1\n1 x\n"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_graph(std::string("0 1 2\n")), ParseError);
  CHECK_THROWS_AS(parse_graph(std::string("3 3\n")), ParseError);
  CHECK_THROWS_AS(parse_graph(std::string("p edge 2 1\ne 1 1\n"), GraphFormat::dimacs), ParseError);
  CHECK_THROWS_AS(parse_graph(std::string("p edge 2 1\ne 1 3\n"), GraphFormat::dimacs), ParseError);
  CHECK_THROWS_AS(parse_graph(std::string("e 1 2\n"), GraphFormat::dimacs), ParseError);
  CHECK_THROWS_AS(make_graph(2, {{1, 1}}), ContractError);
}

TEST_CASE("generators") {
  Graph st = gen(GraphKind::shannon_triangle, testing::with_mu(3));
  CHECK(st.num_vertices() == 3);
  CHECK(st.num_edges() == 9);
  CHECK(st.max_degree() == 6);
  CHECK(st.max_multiplicity() == 3);

  Graph c5 = gen(GraphKind::cycle, testing::with_n(5));
  CHECK(c5.num_vertices() == 5);
  CHECK(c5.num_edges() == 5);
  CHECK(c5.max_degree() == 2);

  Graph a = gen(GraphKind::gnm, testing::with_nm(100, 300), 7);
  Graph b = gen(GraphKind::gnm, testing::with_nm(100, 300), 7);
  CHECK(to_edge_list(a) == to_edge_list(b));
  CHECK(a.num_edges() == 300);
  CHECK_FALSE(a.is_multigraph());

  Graph rr = gen(GraphKind::random_regular, testing::with_nd(50, 6), 3);
  for (Vertex v = 0; v < rr.num_vertices(); ++v) CHECK(rr.degree(v) == 6);
  CHECK_FALSE(rr.is_multigraph());

  Graph pet = gen(GraphKind::petersen, {});
  CHECK(pet.num_vertices() == 10);
  CHECK(pet.num_edges() == 15);
  CHECK(pet.max_degree() == 3);

  CHECK_THROWS_AS(gen(GraphKind::gnm, testing::with_nm(4, 7)), GenerateError);
  CHECK_THROWS_AS(gen(GraphKind::random_regular, testing::with_nd(5, 3)), GenerateError);
  CHECK_THROWS_AS(parse_graph_kind("hypercube"), GenerateError);
}

TEST_CASE("serialization round trip") {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    GenParams p;
    p.n = 30;
    p.m = 60;
    p.mu = 3;
    Graph g = gen(GraphKind::random_multigraph, p, seed);
    Graph back = parse_graph(to_edge_list(g));
    CHECK(testing::sorted_pairs(back) == testing::sorted_pairs(g));
    CHECK(back.max_multiplicity() == g.max_multiplicity());
  }
}

TEST_CASE("euler partition examples") {
  Graph c4 = gen(GraphKind::cycle, testing::with_n(4));
  auto [a, b] = euler_partition(c4);
  CHECK(a.num_edges() == 2);
  CHECK(b.num_edges() == 2);
  CHECK(a.max_degree() == 1);
  CHECK(b.max_degree() == 1);

  Graph single = make_graph(2, {{0, 1}});
  auto [s1, s2] = euler_partition(single);
  CHECK(s1.num_edges() + s2.num_edges() == 1);

  check_halves(gen(GraphKind::gnm, testing::with_nm(1000, 5000), 1));
}

TEST_CASE("euler partition degree bound over a corpus") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    check_halves(gen(GraphKind::gnm, testing::with_nm(200, 700), seed));
    check_halves(gen(GraphKind::random_regular, testing::with_nd(60, 7 + (seed % 2)), seed));
    GenParams p;
    p.n = 40;
    p.m = 120;
    p.mu = 4;
    check_halves(gen(GraphKind::random_multigraph, p, seed));
  }
  check_halves(gen(GraphKind::shannon_triangle, testing::with_mu(4)));
  // Odd multiplicity leaves a triangle after the parallel copies are split.
  check_halves(gen(GraphKind::shannon_triangle, testing::with_mu(5)), 1);
  check_halves(gen(GraphKind::cycle, testing::with_n(9)), 1);
  check_halves(gen(GraphKind::complete, testing::with_n(9)));
}

TEST_CASE("repeated euler partition halves the maximum degree") {
  Graph g = gen(GraphKind::gnm, testing::with_nm(500, 4000), 11);
  std::vector<Graph> level{g};
  for (int depth = 1; depth <= 3; ++depth) {
    std::vector<Graph> next;
    for (const Graph& h : level) {
      auto [a, b] = euler_partition(h);
      next.push_back(std::move(a));
      next.push_back(std::move(b));
    }
    int bound = g.max_degree();
    for (int i = 0; i < depth; ++i) bound = (bound + 1) / 2;
    for (const Graph& h : next) CHECK(h.max_degree() <= bound);
    level = std::move(next);
  }
}

TEST_CASE("induced subgraph keeps parent ids") {
  Graph g = gen(GraphKind::complete, testing::with_n(5));
  std::vector<EdgeId> pick{1, 4, 7};
  Graph sub = induced_by_edges(g, pick);
  CHECK(sub.num_edges() == 3);
  for (EdgeId e = 0; e < 3; ++e) {
    CHECK(sub.parent_edge(e) == pick[e]);
    const Edge& local = sub.edge(e);
    const Edge& orig = g.edge(pick[e]);
    CHECK(std::minmax(sub.parent_vertex(local.u), sub.parent_vertex(local.v)) == std::minmax(orig.u, orig.v));
  }
}

TEST_CASE("bipartite and component queries") {
  CHECK(is_bipartite(gen(GraphKind::cycle, testing::with_n(6))));
  CHECK_FALSE(is_bipartite(gen(GraphKind::cycle, testing::with_n(7))));
  CHECK(count_components(make_graph(6, {{0, 1}, {2, 3}, {3, 4}})) == 2);
}
