#include "edgecolor/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ostream>

#include "edgecolor/generate.hpp"
#include "edgecolor/recursion.hpp"
#include "edgecolor/validate.hpp"

namespace edgecolor {

Graph bench_instance(int64_t m, int delta, uint64_t seed) {
  if (delta <= 0) throw ContractError("bench: delta must be positive");
  int64_t n = std::max<int64_t>(delta + 1, (2 * m + delta - 1) / delta);
  if (n * delta % 2 != 0) ++n;
  GenParams params;
  params.n = static_cast<int>(n);
  params.d = delta;
  return generate(GraphKind::random_regular, params, seed);
}

namespace {

struct Timed {
  int64_t ns = 0;
  bool timeout = false;
  int colors_used = 0;
  bool proper = false;
};

Timed run_once(Algorithm algo, const Graph& g, uint64_t seed, std::optional<double> budget) {
  Options options;
  options.seed = seed;
  auto start = std::chrono::steady_clock::now();
  if (budget) {
    options.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                   std::chrono::duration<double>(*budget));
  }
  RunEnv env(options);
  Timed t;
  try {
    PartialColoring chi = run_algorithm(algo, g, env);
    t.ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
    std::vector<Color> colors = colors_of(chi);
    Verdict v = validate_coloring(g, colors, palette_bound(algo, g));
    t.colors_used = v.colors_used;
    t.proper = v.ok();
  } catch (const TimeoutError&) {
    t.ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
    t.timeout = true;
  }
  return t;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config, std::ostream* progress) {
  std::vector<BenchRow> rows;
  const int reps = std::max(1, config.reps);
  for (Algorithm algo : config.algos) {
    for (uint64_t seed : config.seeds) {
      std::optional<size_t> previous;
      for (int64_t size : config.sizes) {
        Graph g = bench_instance(size, config.delta, seed);
        BenchRow row;
        row.algo = to_string(algo);
        row.size = size;
        row.n = g.num_vertices();
        row.m = g.num_edges();
        row.delta = g.max_degree();
        row.seed = seed;
        row.palette_bound = palette_bound(algo, g);
        if (config.warmup) run_once(algo, g, seed, config.budget_seconds);
        std::vector<int64_t> times;
        row.proper = true;
        for (int r = 0; r < reps; ++r) {
          Timed t = run_once(algo, g, seed, config.budget_seconds);
          times.push_back(t.ns);
          row.reps = r + 1;
          if (t.timeout) {
            row.timeout = true;
            row.proper = false;
            break;
          }
          row.colors_used = t.colors_used;
          row.proper = row.proper && t.proper;
        }
        std::sort(times.begin(), times.end());
        row.wall_ns = times[times.size() / 2];
        if (previous && !rows[*previous].timeout && !row.timeout && rows[*previous].wall_ns > 0) {
          row.ratio = static_cast<double>(row.wall_ns) / static_cast<double>(rows[*previous].wall_ns);
        }
        rows.push_back(row);
        if (progress != nullptr) write_csv_row(*progress, row);
        previous = rows.size() - 1;
      }
    }
  }
  return rows;
}

void write_csv_header(std::ostream& out) {
  out << "algo,size,n,m,delta,seed,reps,colors_used,palette_bound,proper,status,wall_ns,ratio\n";
}

void write_csv_row(std::ostream& out, const BenchRow& row) {
  out << row.algo << ',' << row.size << ',' << row.n << ',' << row.m << ',' << row.delta << ',' << row.seed << ','
      << row.reps << ',' << row.colors_used << ',' << row.palette_bound << ',' << (row.proper ? 1 : 0) << ','
      << (row.timeout ? "timeout" : "ok") << ',' << row.wall_ns << ',';
  if (row.ratio) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, *row.ratio, std::chars_format::fixed, 4);
    out.write(buf, res.ptr - buf);
  }
  out << '\n';
}

void write_csv(std::ostream& out, std::span<const BenchRow> rows) {
  write_csv_header(out);
  for (const BenchRow& row : rows) write_csv_row(out, row);
}

}  // namespace edgecolor
