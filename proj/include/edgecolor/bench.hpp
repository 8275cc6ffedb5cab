#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edgecolor/driver.hpp"
#include "edgecolor/graph.hpp"

namespace edgecolor {

struct BenchConfig {
  std::vector<Algorithm> algos;
  std::vector<int64_t> sizes;  // target edge counts
  int delta = 64;
  std::vector<uint64_t> seeds;
  std::optional<double> budget_seconds;  // per run
  int reps = 1;  // timed runs per cell; the row reports their median
  bool warmup = true;
};

struct BenchRow {
  std::string algo;
  int64_t size = 0;
  int n = 0;
  int64_t m = 0;
  int delta = 0;
  uint64_t seed = 0;
  int reps = 0;
  int colors_used = 0;
  int palette_bound = 0;
  bool proper = false;
  bool timeout = false;
  int64_t wall_ns = 0;  // median over reps
  std::optional<double> ratio;  // wall_ns over the previous size's, same algo and seed
};

// Random d-regular graph with about `m` edges (n = ceil(2m / d), rounded up so n*d is even).
Graph bench_instance(int64_t m, int delta, uint64_t seed);

std::vector<BenchRow> run_bench(const BenchConfig& config, std::ostream* progress = nullptr);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const BenchRow& row);
void write_csv(std::ostream& out, std::span<const BenchRow> rows);

}  // namespace edgecolor
