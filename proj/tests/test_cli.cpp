#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using edgecolor::cli::run;

namespace {

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  Invocation r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// A scratch directory removed at scope exit.
class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("edgecolor-cli-" + std::to_string(counter_++))) {
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;

  std::string write(const std::string& name, const std::string& text) const {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("color a triangle") {
  Scratch tmp;
  std::string tri = tmp.write("tri.el", "1 2\n2 3\n3 1\n");
  Invocation r = invoke({"color", "--algo", "nearlinear", "--seed", "7", tri});
  CHECK(r.code == 0);
  CHECK(lines_of(r.out).at(0) == "colors 3");
  CHECK(lines_of(r.out).size() == 4);
}

TEST_CASE("color writes the coloring and the report to files") {
  Scratch tmp;
  std::string g = tmp.write("pet.el", edgecolor::to_edge_list(testing::gen(edgecolor::GraphKind::petersen, {})));
  std::string out = tmp.path("pet.col");
  std::string report = tmp.path("pet.json");
  Invocation r = invoke({"color", "--algo", "classic", "--out", out, "--report", report, g});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  nlohmann::json j = nlohmann::json::parse(slurp(report));
  CHECK(j["algorithm"] == "classic");
  CHECK(j["m"] == 15);
  CHECK(j["uncolored_remaining"] == 0);
  CHECK(j["proper"] == true);
  CHECK(j["colors_used"].get<int>() <= 4);
  CHECK(j["counters"].contains("flips"));
  Invocation v = invoke({"validate", g, out});
  CHECK(v.code == 0);
  CHECK(v.out.rfind("valid proper=1", 0) == 0);
}

TEST_CASE("shannon on a simple graph") {
  Scratch tmp;
  std::string g = tmp.write("grid.el", edgecolor::to_edge_list(testing::gen(edgecolor::GraphKind::complete, testing::with_n(7))));
  Invocation r = invoke({"color", "--algo", "shannon", g});
  CHECK(r.code == 0);
  int colors = std::stoi(lines_of(r.out).at(0).substr(7));
  CHECK(colors <= 9);
}

TEST_CASE("bipartite on an odd cycle fails") {
  Scratch tmp;
  std::string c5 = tmp.write("c5.el", "0 1\n1 2\n2 3\n3 4\n4 0\n");
  Invocation r = invoke({"color", "--algo", "bipartite", c5});
  CHECK(r.code == 1);
  CHECK(r.err.find("bipartite") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  Scratch tmp;
  std::string tri = tmp.write("tri.el", "1 2\n2 3\n3 1\n");
  CHECK(invoke({"color", "--bogus", tri}).code == 2);
  CHECK(invoke({"color", "--algo", "nope", tri}).code == 2);
  CHECK(invoke({"color"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"gen", "--kind", "hypercube"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("missing and malformed inputs exit 1") {
  Scratch tmp;
  CHECK(invoke({"color", tmp.path("absent.el")}).code == 1);
  std::string bad = tmp.write("bad.el", "1 2\n2 x\n");
  Invocation r = invoke({"color", bad});
  CHECK(r.code == 1);
  CHECK(r.err.find("2") != std::string::npos);
}

TEST_CASE("validate") {
  Scratch tmp;
  std::string tri = tmp.write("tri.el", "1 2\n2 3\n3 1\n");
  std::string good = tmp.write("good.col", "colors 3\n0 1 2 0\n1 2 3 1\n2 3 1 2\n");
  Invocation ok = invoke({"validate", tri, good});
  CHECK(ok.code == 0);
  CHECK(ok.out.rfind("valid proper=1 colors_used=3 uncolored=0", 0) == 0);

  std::string clash = tmp.write("clash.col", "colors 2\n0 1 2 0\n1 2 3 0\n2 3 1 1\n");
  Invocation bad = invoke({"validate", tri, clash});
  CHECK(bad.code == 1);
  CHECK(bad.out.rfind("invalid proper=0", 0) == 0);
  CHECK(lines_of(bad.out).size() >= 2);

  Invocation palette = invoke({"validate", "--palette", "2", tri, good});
  CHECK(palette.code == 1);
  CHECK(palette.out.find("palette_ok=0") != std::string::npos);

  std::string wrong = tmp.write("wrong.col", "colors 3\n0 1 3 0\n1 2 3 1\n2 3 1 2\n");
  CHECK(invoke({"validate", tri, wrong}).code == 1);
}

TEST_CASE("gen") {
  Invocation r = invoke({"gen", "--kind", "cycle", "--n", "6"});
  REQUIRE(r.code == 0);
  edgecolor::Graph g = edgecolor::parse_graph(r.out);
  CHECK(g.num_edges() == 6);
  CHECK(g.max_degree() == 2);
  Invocation a = invoke({"gen", "--kind", "gnm", "--n", "50", "--m", "200", "--seed", "3"});
  Invocation b = invoke({"gen", "--kind", "gnm", "--n", "50", "--m", "200", "--seed", "3"});
  CHECK(a.out == b.out);
  CHECK(edgecolor::parse_graph(a.out).num_edges() == 200);
}

TEST_CASE("bench writes one row per algorithm, size and seed") {
  Scratch tmp;
  std::string csv = tmp.path("bench.csv");
  Invocation r = invoke({"bench", "--algos", "nearlinear,classic", "--sizes", "2000,4000,8000", "--delta", "8",
                         "--seeds", "1,2", "--no-warmup", "--csv", csv});
  REQUIRE(r.code == 0);
  std::vector<std::string> rows = lines_of(slurp(csv));
  REQUIRE(rows.size() == 1 + 2 * 3 * 2);
  CHECK(rows[0] == "algo,size,n,m,delta,seed,reps,colors_used,palette_bound,proper,status,wall_ns,ratio");
  int with_ratio = 0;
  for (size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].find(",1,ok,") != std::string::npos);
    if (rows[i].back() != ',') ++with_ratio;
  }
  CHECK(with_ratio == 2 * 2 * 2);
}

TEST_CASE("same seed, same output") {
  Scratch tmp;
  std::string g = tmp.write("g.el", edgecolor::to_edge_list(testing::gen(edgecolor::GraphKind::gnm, testing::with_nm(3000, 20000), 5)));
  Invocation a = invoke({"color", "--seed", "11", g});
  Invocation b = invoke({"color", "--seed", "11", g});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
