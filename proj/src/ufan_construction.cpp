#include "edgecolor/ufan_construction.hpp"

#include <algorithm>
#include <string>

namespace edgecolor {

namespace {

void fail(const std::string& what) { throw InvariantViolation("construct: " + what); }

}  // namespace

UFanBuilder::UFanBuilder(PartialColoring& chi, SeparableCollection& U, RunEnv& env, int mu)
    : chi_(chi),
      U_(U),
      env_(env),
      mu_(mu),
      colored_start_(chi.colored_count()),
      fan_at_(chi.graph().num_vertices(), -1),
      s_owner_(chi.graph().num_edges(), -1),
      s_pos_(chi.graph().num_edges(), -1),
      s_from_(chi.graph().num_edges(), kNoVertex) {
  potential_ = 3 * (static_cast<int64_t>(U.fan_count()) + 2 * colored()) + static_cast<int64_t>(U.edge_count());
}

uint64_t UFanBuilder::pair_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) | static_cast<uint32_t>(b);
}

std::vector<Handle> UFanBuilder::create_u_edges(std::span<const EdgeId> uncolored) {
  const Graph& g = chi_.graph();
  std::vector<Handle> out;
  out.reserve(uncolored.size());
  for (EdgeId e : uncolored) {
    if (chi_.is_colored(e)) throw ContractError("construct_u_fans: edge " + std::to_string(e) + " is colored");
    Vertex u = g.edge(e).u;
    Vertex v = g.edge(e).v;
    auto h = U_.insert(UComponent::u_edge(u, v, e, U_.missing_color(u)));
    if (!h) h = U_.insert(UComponent::u_edge(v, u, e, U_.missing_color(v)));
    if (!h) fail("no spare color for the u-edge of edge " + std::to_string(e));
    out.push_back(*h);
  }
  potential_ = 3 * (static_cast<int64_t>(U_.fan_count()) + 2 * colored()) + static_cast<int64_t>(U_.edge_count());
  return out;
}

void UFanBuilder::check_potential() {
  int64_t now = 3 * (static_cast<int64_t>(U_.fan_count()) + 2 * colored()) + static_cast<int64_t>(U_.edge_count());
  env_.count(Counter::potential_checks);
  if (now < potential_) env_.count(Counter::potential_violations);
  potential_ = now;
}

void UFanBuilder::register_fan(Handle h, VizingFan fan) {
  int f = static_cast<int>(fans_.size());
  Fan entry;
  entry.u_edge = h;
  entry.fan = std::move(fan);
  entry.alive = true;
  fans_.push_back(std::move(entry));
  const VizingFan& F = fans_[f].fan;
  fan_at_[F.center] = f;
  marked_.push_back(F.center);
  for (const FanLeaf& leaf : F.leaves) {
    fan_at_[leaf.vertex] = f;
    marked_.push_back(leaf.vertex);
  }
  fan_of_[h] = f;
  ++alive_;
}

void UFanBuilder::drop_prefix(int f) {
  Fan& F = fans_[f];
  const Graph& g = chi_.graph();
  for (EdgeId e : F.prefix) {
    s_owner_[e] = -1;
    s_pos_[e] = -1;
    s_from_[e] = kNoVertex;
    if (mu_ > 1) s_pairs_.erase(pair_key(g.edge(e).u, g.edge(e).v));
  }
  F.prefix.clear();
}

void UFanBuilder::unregister(int f) {
  Fan& F = fans_[f];
  if (!F.alive) return;
  F.alive = false;
  --alive_;
  if (fan_at_[F.fan.center] == f) fan_at_[F.fan.center] = -1;
  for (const FanLeaf& leaf : F.fan.leaves) {
    if (fan_at_[leaf.vertex] == f) fan_at_[leaf.vertex] = -1;
  }
  fan_of_.erase(F.u_edge);
  drop_prefix(f);
}

void UFanBuilder::discard_fan(int f) {
  Handle h = fans_[f].u_edge;
  unregister(f);
  U_.erase(h);
}

int UFanBuilder::leaf_index(const VizingFan& fan, Vertex x) const {
  for (int i = 0; i < fan.size(); ++i) {
    if (fan.leaves[i].vertex == x) return i;
  }
  return -1;
}

void UFanBuilder::settle(const std::vector<PaletteLoss>& journal, int expected) {
  U_.collect_damaged(journal, damaged_);
  int others = 0;
  for (Handle h : damaged_) {
    if (!U_.contains(h)) continue;
    auto it = fan_of_.find(h);
    if (it != fan_of_.end()) unregister(it->second);
    U_.erase(h);
    ++others;
  }
  others -= expected;
  if (others > 0) env_.count(Counter::damage_events, others);
  env_.stats().raise(Counter::max_damage_per_flip, std::max(others, 0));
}

void UFanBuilder::activate(Fan& F) {
  FanActivation report = activate_fan(chi_, F.fan);
  if (report.path_length > 0) {
    env_.count(Counter::flips);
    env_.count(Counter::flip_length, static_cast<int64_t>(report.path_length));
  }
}

void UFanBuilder::prune(Color alpha, std::span<const Handle> u_edges) {
  for (Vertex x : marked_) fan_at_[x] = -1;
  marked_.clear();
  fans_.clear();
  fan_of_.clear();
  alive_ = 0;
  alpha_ = alpha;

  std::vector<Handle> live;
  for (Handle h : u_edges) {
    if (U_.contains(h) && !U_.get(h).is_fan() && U_.get(h).center_color == alpha) live.push_back(h);
  }

  if (mu_ > 1) {
    absl::flat_hash_map<uint64_t, Handle> by_pair;
    for (Handle h : live) {
      if (!U_.contains(h)) continue;
      const UComponent comp = U_.get(h);
      auto [it, fresh] = by_pair.try_emplace(pair_key(comp.center, comp.leaf1), h);
      if (fresh) continue;
      Handle twin = it->second;
      by_pair.erase(it);
      if (!U_.contains(twin)) {
        by_pair[pair_key(comp.center, comp.leaf1)] = h;
        continue;
      }
      {
        JournalScope scope(chi_, journal_);
        U_.erase(h);
        U_.erase(twin);
        chi_.set_color(comp.edge1, alpha);
      }
      settle(journal_, 0);
      check_potential();
    }
    std::erase_if(live, [&](Handle h) { return !U_.contains(h); });
  }

  for (Handle h : live) {
    if (!U_.contains(h)) continue;
    env_.check_deadline();
    const UComponent comp = U_.get(h);
    VizingFan F = build_fan(chi_, comp, &U_, mu_);
    int hit = -1;
    int j = -1;
    for (int t = 0; t <= F.size(); ++t) {
      Vertex x = t == 0 ? F.center : F.leaves[t - 1].vertex;
      if (fan_at(x) >= 0) {
        hit = t;
        j = fan_at(x);
        break;
      }
    }
    if (hit < 0) {
      register_fan(h, std::move(F));
      continue;
    }
    Fan& Fj = fans_[j];
    const VizingFan& other = Fj.fan;
    if (env_.debug() && !fan_is_valid(chi_, other)) fail("registered fan went stale during pruning");
    Handle hj = Fj.u_edge;
    if (hit == 0) {
      int q = leaf_index(other, F.center);
      if (q < 0) fail("fan center coincides with another fan's center");
      VizingFan saved = other;
      unregister(j);
      {
        JournalScope scope(chi_, journal_);
        U_.erase(h);
        U_.erase(hj);
        rotate_to(chi_, saved, q);
        chi_.set_color(saved.leaves[q].edge, alpha);
      }
      settle(journal_, 0);
      check_potential();
      continue;
    }
    Vertex w = F.leaves[hit - 1].vertex;
    if (w == other.center) {
      unregister(j);
      {
        JournalScope scope(chi_, journal_);
        U_.erase(h);
        U_.erase(hj);
        rotate_to(chi_, F, hit - 1);
        chi_.set_color(F.leaves[hit - 1].edge, alpha);
      }
      settle(journal_, 0);
      check_potential();
      continue;
    }
    int q = leaf_index(other, w);
    if (q < 0) fail("shared vertex is neither center nor leaf");
    VizingFan saved = other;
    unregister(j);
    {
      JournalScope scope(chi_, journal_);
      U_.erase(h);
      U_.erase(hj);
      rotate_to(chi_, F, hit - 1);
      rotate_to(chi_, saved, q);
    }
    settle(journal_, 0);
    std::vector<Color> spare;
    U_.spare_colors(w, 2, spare);
    Color beta = spare[0] == alpha ? spare.at(1) : spare[0];
    auto made = U_.insert(UComponent::u_fan(w, F.center, saved.center, F.leaves[hit - 1].edge,
                                            saved.leaves[q].edge, beta, alpha));
    if (!made) fail("pruning could not insert the u-fan at vertex " + std::to_string(w));
    check_potential();
  }

  if (env_.debug()) {
    for (const Fan& F : fans_) {
      if (!F.alive) continue;
      if (!fan_is_valid(chi_, F.fan) || !fan_avoids(F.fan, U_)) fail("pruned fan is not a valid avoiding fan");
    }
  }
}

void UFanBuilder::reduce(Color alpha) {
  if (alpha != alpha_) throw ContractError("reduce: color differs from the pruned color");
  const int64_t m_alpha = chi_.class_size(alpha);
  const int lambda_alpha = alive_;
  rounds_ = 0;
  if (lambda_alpha == 0) return;

  for (int f = 0; f < static_cast<int>(fans_.size()); ++f) {
    Fan& F = fans_[f];
    if (!F.alive || !F.fan.trivial) continue;
    Handle h = F.u_edge;
    unregister(f);
    {
      JournalScope scope(chi_, journal_);
      activate(F);
      U_.erase(h);
    }
    settle(journal_, 0);
    check_potential();
  }

  for (Fan& F : fans_) {
    if (!F.alive) continue;
    F.prefix.clear();
    F.cursor = F.fan.center;
    F.next = F.fan.chain_color;
  }

  while (alive_ > lambda_alpha / 2) {
    ++rounds_;
    env_.check_deadline();
    for (int f = 0; f < static_cast<int>(fans_.size()); ++f) {
      if (fans_[f].alive) update_path(f);
    }
    if (env_.debug()) audit_round();
  }
  if (static_cast<double>(rounds_) > 6.0 * static_cast<double>(m_alpha) / lambda_alpha + 12) {
    env_.count(Counter::path_packing_violations);
  }

  for (int f = 0; f < static_cast<int>(fans_.size()); ++f) unregister(f);
}

void UFanBuilder::update_path(int f) {
  Fan& F = fans_[f];
  const Graph& g = chi_.graph();
  const Vertex x = F.cursor;
  const EdgeId e = chi_.slot(x, F.next);
  if (e == kNoEdge) {
    finish_maximal(f, x);
    return;
  }
  const Vertex y = g.other(e, x);
  if (s_owner_[e] >= 0) {
    collide(f, e, x);
    return;
  }
  if (mu_ > 1) {
    auto it = s_pairs_.find(pair_key(x, y));
    if (it != s_pairs_.end()) {
      meet_parallel(f, e, it->second);
      return;
    }
    s_pairs_[pair_key(x, y)] = e;
  }
  s_owner_[e] = f;
  s_pos_[e] = static_cast<int>(F.prefix.size());
  s_from_[e] = x;
  F.prefix.push_back(e);
  F.cursor = y;
  F.next = F.next == alpha_ ? F.fan.chain_color : alpha_;
  if (chi_.slot(y, F.next) == kNoEdge) finish_maximal(f, y);
}

void UFanBuilder::finish_maximal(int f, Vertex end) {
  Fan& F = fans_[f];
  Handle h = F.u_edge;
  unregister(f);
  {
    JournalScope scope(chi_, journal_);
    activate(F);
    U_.erase(h);
  }
  settle(journal_, 0);
  int other = fan_at(end);
  if (other >= 0) discard_fan(other);
  check_potential();
}

void UFanBuilder::collide(int f, EdgeId e, Vertex x) {
  const Graph& g = chi_.graph();
  const int f2 = s_owner_[e];
  Fan& F = fans_[f];
  Fan& F2 = fans_[f2];
  const bool same = s_from_[e] == x;
  Handle h = F.u_edge;
  Handle h2 = F2.u_edge;

  if (same) {
    const int pos2 = s_pos_[e];
    if (F.prefix.empty() || pos2 < 1) fail("same-orientation meeting at the start of a chain");
    EdgeId zx = F.prefix.back();
    EdgeId z2x = F2.prefix[pos2 - 1];
    Vertex z = g.other(zx, x);
    Vertex z2 = g.other(z2x, x);
    Color beta = chi_.color_of(zx);
    unregister(f);
    unregister(f2);
    {
      JournalScope scope(chi_, journal_);
      U_.erase(h);
      U_.erase(h2);
      chi_.set_color(zx, kUncolored);
      chi_.set_color(z2x, kUncolored);
      if (!refresh_fan(chi_, F.fan)) fail("fan broken by truncation");
      activate(F);
      if (!refresh_fan(chi_, F2.fan)) fail("fan broken by a neighbouring activation");
      activate(F2);
    }
    settle(journal_, 0);
    auto made = U_.insert(UComponent::u_fan(x, z, z2, zx, z2x, beta, alpha_));
    if (!made && env_.debug()) fail("chain meeting produced an invalid u-fan at vertex " + std::to_string(x));
    check_potential();
    return;
  }

  unregister(f);
  unregister(f2);
  {
    JournalScope scope(chi_, journal_);
    U_.erase(h);
    U_.erase(h2);
    chi_.set_color(e, kUncolored);
    if (!refresh_fan(chi_, F.fan)) fail("fan broken by truncation");
    activate(F);
    if (!refresh_fan(chi_, F2.fan)) fail("fan broken by a neighbouring activation");
    activate(F2);
  }
  settle(journal_, 0);
  check_potential();
}

void UFanBuilder::meet_parallel(int f, EdgeId e, EdgeId twin) {
  const Graph& g = chi_.graph();
  const int f2 = s_owner_[twin];
  Fan& F = fans_[f];
  Fan& F2 = fans_[f2];
  Handle h = F.u_edge;
  Handle h2 = F2.u_edge;
  unregister(f);
  unregister(f2);
  {
    JournalScope scope(chi_, journal_);
    U_.erase(h);
    U_.erase(h2);
    chi_.set_color(e, kUncolored);
    chi_.set_color(twin, kUncolored);
    if (!refresh_fan(chi_, F.fan)) fail("fan broken by truncation");
    activate(F);
    if (!refresh_fan(chi_, F2.fan)) fail("fan broken by a neighbouring activation");
    activate(F2);
    if (chi_.is_missing(g.edge(e).u, alpha_) && chi_.is_missing(g.edge(e).v, alpha_)) {
      chi_.set_color(e, alpha_);
    } else if (env_.debug()) {
      fail("parallel chain meeting left no room for the primer color");
    }
  }
  settle(journal_, 0);
  check_potential();
}

void UFanBuilder::audit_round() const {
  const Graph& g = chi_.graph();
  int alive = 0;
  for (int f = 0; f < static_cast<int>(fans_.size()); ++f) {
    const Fan& F = fans_[f];
    if (!F.alive) continue;
    ++alive;
    if (static_cast<int>(F.prefix.size()) != rounds_) fail("chain prefix length differs from the round");
    if (!fan_is_valid(chi_, F.fan)) fail("registered fan is stale");
    if (!fan_avoids(F.fan, U_)) fail("registered fan is not avoiding");
    if (fan_at_[F.fan.center] != f) fail("fan vertex index is inconsistent");
    for (const FanLeaf& leaf : F.fan.leaves) {
      if (fan_at_[leaf.vertex] != f) fail("fans are not vertex-disjoint");
    }
    AlternatingPath path = vizing_path(chi_, F.fan, F.prefix.size());
    if (path.edges != F.prefix) fail("chain prefix is not a prefix of the Vizing path");
    for (size_t i = 0; i < F.prefix.size(); ++i) {
      EdgeId e = F.prefix[i];
      if (s_owner_[e] != f || s_pos_[e] != static_cast<int>(i)) fail("explored edge set is inconsistent");
      if (mu_ > 1) {
        auto it = s_pairs_.find(pair_key(g.edge(e).u, g.edge(e).v));
        if (it == s_pairs_.end() || it->second != e) fail("parallel explored edges");
      }
    }
    if (U_.component_of_edge(F.fan.leaves[0].edge) != F.u_edge) fail("fan lost its u-edge");
  }
  if (alive != alive_) fail("alive fan count");
  int primed = 0;
  for (Handle h : U_.handles()) {
    const UComponent& c = U_.get(h);
    if (!c.is_fan() && c.center_color == alpha_ && fan_of_.contains(h)) ++primed;
  }
  int all_primed = 0;
  for (Handle h : U_.handles()) {
    const UComponent& c = U_.get(h);
    if (!c.is_fan() && c.center_color == alpha_) ++all_primed;
  }
  if (primed != alive_ || all_primed != alive_) fail("fans and primed u-edges differ in number");
  U_.audit();
  chi_.audit();
}

ConstructOutcome construct_u_fans(PartialColoring& chi, std::span<const EdgeId> uncolored, SeparableCollection& U,
                                  int mu, RunEnv& env) {
  ConstructOutcome outcome;
  const int lambda = static_cast<int>(uncolored.size());
  env.count(Counter::construct_calls);
  env.count(Counter::construct_lambda, lambda);
  if (lambda == 0) return outcome;
  UFanBuilder builder(chi, U, env, mu);
  std::vector<Handle> handles = builder.create_u_edges(uncolored);

  std::vector<std::vector<Handle>> by_color(chi.palette_size());
  for (Handle h : handles) by_color[U.get(h).center_color].push_back(h);
  for (Color alpha = 0; alpha < chi.palette_size(); ++alpha) {
    if (U.edge_count() == 0) break;
    if (by_color[alpha].empty()) continue;
    builder.prune(alpha, by_color[alpha]);
    builder.reduce(alpha);
  }

  std::vector<Handle> leftovers;
  for (Handle h : U.handles()) {
    if (!U.get(h).is_fan()) leftovers.push_back(h);
  }
  for (Handle h : leftovers) U.erase(h);

  outcome.colored = builder.colored();
  outcome.ufans = static_cast<int>(U.fan_count());
  env.count(Counter::construct_colored, outcome.colored);
  env.count(Counter::construct_ufans, outcome.ufans);
  if (outcome.colored + outcome.ufans < (lambda + 17) / 18) env.count(Counter::construct_yield_violations);
  return outcome;
}

}  // namespace edgecolor
