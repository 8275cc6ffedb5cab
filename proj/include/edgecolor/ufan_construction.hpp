#pragma once

#include <span>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "edgecolor/coloring.hpp"
#include "edgecolor/separable_collection.hpp"
#include "edgecolor/vizing_fan.hpp"
#include "edgecolor/workspace.hpp"

namespace edgecolor {

struct ConstructOutcome {
  int colored = 0;  // net newly colored edges
  int ufans = 0;    // u-fans left in the collection
};

// Turns a set of uncolored edges into colored edges and separable u-fans.
// On return the collection holds only u-fans.
ConstructOutcome construct_u_fans(PartialColoring& chi, std::span<const EdgeId> uncolored, SeparableCollection& U,
                                  int mu, RunEnv& env);

// State of one construction pass; exposed so that the per-color phases can be
// driven and inspected separately.
class UFanBuilder {
 public:
  struct Fan {
    Handle u_edge = kNoHandle;
    VizingFan fan;
    bool alive = false;
    std::vector<EdgeId> prefix;  // explored part of the Vizing path
    Vertex cursor = kNoVertex;
    Color next = kUncolored;
  };

  UFanBuilder(PartialColoring& chi, SeparableCollection& U, RunEnv& env, int mu);

  // One u-edge per uncolored edge, centered at the first endpoint whenever possible.
  std::vector<Handle> create_u_edges(std::span<const EdgeId> uncolored);

  // Leaves a vertex-disjoint avoiding fan for every remaining alpha-primed u-edge.
  void prune(Color alpha, std::span<const Handle> u_edges);
  // Explores the Vizing chains of the registered fans until half are resolved.
  void reduce(Color alpha);
  // One more edge on the chain of fan f.
  void update_path(int f);

  const std::vector<Fan>& fans() const { return fans_; }
  int alive_fans() const { return alive_; }
  int rounds() const { return rounds_; }
  int colored() const { return chi_.colored_count() - colored_start_; }

  // Debug scan of the chain invariants at a round boundary.
  void audit_round() const;

 private:
  void register_fan(Handle h, VizingFan fan);
  void unregister(int f);
  void drop_prefix(int f);
  void discard_fan(int f);  // unregister and delete its u-edge
  int fan_at(Vertex x) const { return fan_at_[x]; }
  int leaf_index(const VizingFan& fan, Vertex x) const;
  // Removes every component the logged palette losses invalidated.
  void settle(const std::vector<PaletteLoss>& journal, int expected);
  void check_potential();
  void activate(Fan& fan);
  void finish_maximal(int f, Vertex end);
  void collide(int f, EdgeId e, Vertex x);
  void meet_parallel(int f, EdgeId e, EdgeId twin);
  static uint64_t pair_key(Vertex a, Vertex b);

  PartialColoring& chi_;
  SeparableCollection& U_;
  RunEnv& env_;
  int mu_;
  Color alpha_ = kUncolored;
  int colored_start_ = 0;
  int64_t potential_ = 0;

  std::vector<Fan> fans_;
  int alive_ = 0;
  std::vector<int> fan_at_;
  std::vector<Vertex> marked_;
  absl::flat_hash_map<Handle, int> fan_of_;

  int rounds_ = 0;
  std::vector<int> s_owner_;
  std::vector<int> s_pos_;
  std::vector<Vertex> s_from_;
  absl::flat_hash_map<uint64_t, EdgeId> s_pairs_;
  std::vector<PaletteLoss> journal_;
  std::vector<Handle> damaged_;
};

}  // namespace edgecolor
