#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "edgecolor/rng.hpp"
#include "edgecolor/types.hpp"

namespace edgecolor {

struct Options {
  bool debug = false;  // O(m)-per-step audits of every invariant
  uint64_t seed = 0;
  int base_case_edges = 256;  // recursion stops at m <= this (0 disables)
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

enum class Counter : int {
  recursion_depth,
  merges,
  merge_bound_violations,
  main_extend_rounds,
  main_extend_round_bound_violations,
  classic_steps,
  base_case_edges,
  flips,
  flip_length,
  damage_events,
  max_damage_per_flip,
  fan_rebuilds,
  construct_calls,
  construct_lambda,
  construct_colored,
  construct_ufans,
  construct_yield_violations,
  potential_checks,
  potential_violations,
  path_packing_violations,
  color_ufans_calls,
  color_ufans_colored,
  color_ufans_bound_violations,
  prime_calls,
  prime_iterations,
  prime_successes,
  prime_budget_failures,
  prime_conflict_failures,
  prime_restarts,
  big_u_checks,
  big_u_violations,
  small_color_violations,
  activate_calls,
  activate_colored,
  activate_half_violations,
  bipartite_calls,
  bipartite_iterations,
  bipartite_successes,
  bipartite_restarts,
  bipartite_fallback_edges,
  bipartite_forloop_violations,
  prefan_calls,
  prefan_candidates,
  prefan_built,
  prefan_yield_violations,
  shannon_direct,
  shannon_fans,
  shannon_cleanup_edges,
  count_,
};

std::string_view counter_name(Counter c);

class RunStats {
 public:
  static constexpr int kCount = static_cast<int>(Counter::count_);

  int64_t get(Counter c) const { return values_[static_cast<int>(c)]; }
  void add(Counter c, int64_t delta = 1) { values_[static_cast<int>(c)] += delta; }
  void raise(Counter c, int64_t value) {
    auto& slot = values_[static_cast<int>(c)];
    if (value > slot) slot = value;
  }
  const std::array<int64_t, kCount>& values() const { return values_; }

 private:
  std::array<int64_t, kCount> values_{};
};

// Options, counters and RNG streams shared by one run.
class RunEnv {
 public:
  explicit RunEnv(Options options = {}) : options_(options) {}

  const Options& options() const { return options_; }
  bool debug() const { return options_.debug; }
  RunStats& stats() { return stats_; }
  const RunStats& stats() const { return stats_; }
  void count(Counter c, int64_t delta = 1) { stats_.add(c, delta); }

  // A stream no other call in this run has used.
  Rng fresh_rng() { return Rng(options_.seed, next_stream_++); }

  // Throws TimeoutError once the deadline has passed (clock read every 256 calls).
  void check_deadline() {
    if (!options_.deadline) return;
    if ((ticks_++ & 255) != 0) return;
    if (std::chrono::steady_clock::now() > *options_.deadline) throw TimeoutError();
  }

 private:
  Options options_;
  RunStats stats_;
  uint64_t next_stream_ = 1;
  uint64_t ticks_ = 0;
};

}  // namespace edgecolor
