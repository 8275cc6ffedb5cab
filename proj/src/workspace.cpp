#include "edgecolor/workspace.hpp"

#include "edgecolor/types.hpp"

namespace edgecolor {

namespace {

constexpr std::array<std::string_view, RunStats::kCount> kNames = {
    "recursion_depth",
    "merges",
    "merge_bound_violations",
    "main_extend_rounds",
    "main_extend_round_bound_violations",
    "classic_steps",
    "base_case_edges",
    "flips",
    "flip_length",
    "damage_events",
    "max_damage_per_flip",
    "fan_rebuilds",
    "construct_calls",
    "construct_lambda",
    "construct_colored",
    "construct_ufans",
    "construct_yield_violations",
    "potential_checks",
    "potential_violations",
    "path_packing_violations",
    "color_ufans_calls",
    "color_ufans_colored",
    "color_ufans_bound_violations",
    "prime_calls",
    "prime_iterations",
    "prime_successes",
    "prime_budget_failures",
    "prime_conflict_failures",
    "prime_restarts",
    "big_u_checks",
    "big_u_violations",
    "small_color_violations",
    "activate_calls",
    "activate_colored",
    "activate_half_violations",
    "bipartite_calls",
    "bipartite_iterations",
    "bipartite_successes",
    "bipartite_restarts",
    "bipartite_fallback_edges",
    "bipartite_forloop_violations",
    "prefan_calls",
    "prefan_candidates",
    "prefan_built",
    "prefan_yield_violations",
    "shannon_direct",
    "shannon_fans",
    "shannon_cleanup_edges",
};

}  // namespace

std::string_view counter_name(Counter c) { return kNames[static_cast<int>(c)]; }

}  // namespace edgecolor
