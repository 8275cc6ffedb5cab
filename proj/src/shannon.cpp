#include "edgecolor/shannon.hpp"

#include <algorithm>
#include <string>

#include <absl/container/flat_hash_map.h>

#include "edgecolor/recursion.hpp"

namespace edgecolor {

bool is_valid(const PartialColoring& chi, const PreShannonFan& s) {
  if (s.u == s.v || s.u == s.w || s.v == s.w) return false;
  if (chi.is_colored(s.edge_uv) || chi.color_of(s.edge_uw) != s.gamma) return false;
  return chi.is_missing(s.v, s.gamma);
}

bool is_valid(const PartialColoring& chi, const ShannonFan& s) {
  if (s.alpha == s.beta || s.alpha == s.gamma || s.beta == s.gamma) return false;
  if (s.alpha == kUncolored || s.beta == kUncolored) return false;
  if (!is_valid(chi, PreShannonFan{s.u, s.v, s.w, s.edge_uv, s.edge_uw, s.gamma})) return false;
  return chi.is_missing(s.u, s.alpha) && chi.is_missing(s.v, s.beta) && chi.is_missing(s.w, s.beta);
}

namespace {

void require_palette(const PartialColoring& chi) {
  int delta = chi.graph().max_degree();
  if (chi.palette_size() < shannon_palette(delta)) {
    throw ContractError("palette " + std::to_string(chi.palette_size()) + " below floor(3*" + std::to_string(delta) +
                        "/2)");
  }
}

// Shared tail of create and upgrade: (u, w) has color gamma missing at v.
std::optional<ShannonFan> finish_fan(PartialColoring& chi, const PreShannonFan& pre) {
  const auto [u, v, w, uv, uw, gamma] = pre;
  if (Color c = chi.common_missing(u, v); c != kUncolored) {
    chi.set_color(uv, c);
    return std::nullopt;
  }
  if (Color c = chi.common_missing(u, w); c != kUncolored) {
    chi.set_color(uw, c);
    chi.set_color(uv, gamma);
    return std::nullopt;
  }
  Color beta = chi.common_missing(v, w);
  if (beta == kUncolored) throw InvariantViolation("no color missing at both leaves of a Shannon fan");
  return ShannonFan{u, v, w, uv, uw, chi.missing_color_of(u), beta, gamma};
}

}  // namespace

std::optional<ShannonFan> create_shannon_fan(PartialColoring& chi, EdgeId e) {
  require_palette(chi);
  if (chi.is_colored(e)) throw ContractError("create_shannon_fan: edge " + std::to_string(e) + " is colored");
  const Edge& ed = chi.graph().edge(e);
  const Vertex u = ed.u;
  const Vertex v = ed.v;
  const Color gamma = chi.missing_color_of(v);
  const EdgeId uw = chi.slot(u, gamma);
  if (uw == kNoEdge) {
    chi.set_color(e, gamma);
    return std::nullopt;
  }
  return finish_fan(chi, {u, v, chi.graph().other(uw, u), e, uw, gamma});
}

std::optional<ShannonFan> upgrade_pre_shannon_fan(PartialColoring& chi, const PreShannonFan& pre) {
  require_palette(chi);
  if (!is_valid(chi, pre)) throw ContractError("upgrade_pre_shannon_fan: stale pre-fan");
  return finish_fan(chi, pre);
}

ShannonActivation activate_shannon_fan(PartialColoring& chi, const ShannonFan& s) {
  if (!is_valid(chi, s)) throw ContractError("activate_shannon_fan: invalid fan");
  AlternatingPath path;
  chi.walk_alternating(s.v, s.alpha, s.beta, kUnlimited, path);
  if (path.end != s.u || path.empty()) {
    chi.flip(path);
    chi.set_color(s.edge_uv, s.alpha);
    return {false, path.length()};
  }
  chi.walk_alternating(s.w, s.alpha, s.beta, kUnlimited, path);
  if (path.end == s.u && !path.empty()) throw InvariantViolation("both leaf paths of a Shannon fan end at its center");
  chi.flip(path);
  chi.set_color(s.edge_uw, kUncolored);
  chi.set_color(s.edge_uv, s.gamma);
  chi.set_color(s.edge_uw, s.alpha);
  return {true, path.length()};
}

namespace {

// Sum over candidate edges (u, v) with u, v outside S of the gamma in miss(v)
// whose gamma-edge at u leads outside S.
int64_t prefan_potential(const PartialColoring& chi, std::span<const EdgeId> edges, const std::vector<char>& taken) {
  const Graph& g = chi.graph();
  int64_t total = 0;
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    if (taken[ed.u] || taken[ed.v]) continue;
    for (Color c = 0; c < chi.palette_size(); ++c) {
      if (!chi.is_missing(ed.v, c)) continue;
      EdgeId uw = chi.slot(ed.u, c);
      if (uw != kNoEdge && !taken[g.other(uw, ed.u)]) ++total;
    }
  }
  return total;
}

}  // namespace

std::vector<PreShannonFan> construct_pre_shannon_fans(const PartialColoring& chi, std::span<const EdgeId> edges,
                                                      RunEnv& env) {
  const Graph& g = chi.graph();
  const int delta = g.max_degree();
  env.count(Counter::prefan_calls);
  env.count(Counter::prefan_candidates, static_cast<int64_t>(edges.size()));
  std::vector<PreShannonFan> out;
  std::vector<char> taken(g.num_vertices(), 0);
  int64_t potential = env.debug() ? prefan_potential(chi, edges, taken) : 0;
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    const Vertex u = ed.u;
    const Vertex v = ed.v;
    if (env.debug() && 4 * std::min(g.degree(u), g.degree(v)) < delta) {
      throw InvariantViolation("pre-fan candidate edge " + std::to_string(e) + " has an endpoint of degree below delta/4");
    }
    if (taken[u] || taken[v]) continue;
    for (Color gamma = 0; gamma < chi.palette_size(); ++gamma) {
      if (!chi.is_missing(v, gamma)) continue;
      EdgeId uw = chi.slot(u, gamma);
      if (uw == kNoEdge) continue;
      Vertex w = g.other(uw, u);
      if (taken[w]) continue;
      out.push_back({u, v, w, e, uw, gamma});
      taken[u] = taken[v] = taken[w] = 1;
      break;
    }
    if (env.debug() && !out.empty() && out.back().edge_uv == e) {
      int64_t after = prefan_potential(chi, edges, taken);
      env.count(Counter::potential_checks);
      if (potential - after > 8 * static_cast<int64_t>(std::max(1, delta))) env.count(Counter::potential_violations);
      potential = after;
    }
  }
  env.count(Counter::prefan_built, static_cast<int64_t>(out.size()));
  if (64 * out.size() < edges.size()) env.count(Counter::prefan_yield_violations);
  return out;
}

namespace {

// Vertex-disjoint fans with damage tracking through the coloring journal.
class FanPool {
 public:
  FanPool(PartialColoring& chi, std::span<const ShannonFan> fans, RunEnv& env) : chi_(chi), env_(env) {
    for (const ShannonFan& s : fans) {
      if (!is_valid(chi, s)) throw ContractError("color_shannon_fans: invalid fan");
      int id = static_cast<int>(fans_.size());
      for (Vertex x : {s.u, s.v, s.w}) {
        if (!owner_.emplace(x, id).second) throw ContractError("color_shannon_fans: fans share a vertex");
      }
      fans_.push_back(s);
      alive_.push_back(1);
      primed_.push_back(0);
      live_ids_.push_back(id);
    }
    alive_count_ = static_cast<int>(fans_.size());
  }

  int alive_count() const { return alive_count_; }
  int colored() const { return colored_; }
  const ShannonFan& fan(int id) const { return fans_[id]; }
  bool alive(int id) const { return alive_[id] != 0; }

  std::vector<int>& live_ids() {
    std::erase_if(live_ids_, [&](int id) { return !alive_[id]; });
    return live_ids_;
  }

  int owner(Vertex x) const {
    auto it = owner_.find(x);
    return it == owner_.end() ? -1 : it->second;
  }

  bool is_primed(int id) const { return primed_[id] != 0; }
  bool touches_primed(Vertex x) const {
    int id = owner(x);
    return id >= 0 && alive_[id] && primed_[id];
  }
  void set_primed(int id, bool on) { primed_[id] = on ? 1 : 0; }

  void retire(int id) {
    if (!alive_[id]) return;
    alive_[id] = 0;
    primed_[id] = 0;
    --alive_count_;
  }

  void set_fan(int id, const ShannonFan& s) { fans_[id] = s; }

  // Re-derives the colors of a damaged fan from its pre-fan, coloring the
  // edge when that is possible directly.
  void repair(int id) {
    primed_[id] = 0;
    PreShannonFan pre{fans_[id].u, fans_[id].v, fans_[id].w, fans_[id].edge_uv, fans_[id].edge_uw, fans_[id].gamma};
    if (!is_valid(chi_, pre)) {
      retire(id);
      return;
    }
    std::optional<ShannonFan> s = finish_fan(chi_, pre);
    if (!s) {
      ++colored_;
      env_.count(Counter::shannon_direct);
      retire(id);
      return;
    }
    fans_[id] = *s;
  }

  void note_colored(int id) {
    ++colored_;
    retire(id);
  }

  // Inspects every fan touched by the logged losses.
  void absorb(std::span<const PaletteLoss> journal, int except) {
    scratch_.clear();
    for (const PaletteLoss& loss : journal) {
      int id = owner(loss.vertex);
      if (id >= 0 && id != except && alive_[id]) scratch_.push_back(id);
    }
    std::sort(scratch_.begin(), scratch_.end());
    scratch_.erase(std::unique(scratch_.begin(), scratch_.end()), scratch_.end());
    int damaged = 0;
    for (int id : scratch_) {
      if (is_valid(chi_, fans_[id])) continue;
      ++damaged;
      repair(id);
    }
    if (damaged > 0) {
      env_.count(Counter::damage_events, damaged);
      env_.stats().raise(Counter::max_damage_per_flip, damaged);
    }
  }

  void audit() const {
    for (size_t id = 0; id < fans_.size(); ++id) {
      if (alive_[id] && !is_valid(chi_, fans_[id])) {
        throw InvariantViolation("Shannon fan " + std::to_string(id) + " is stale");
      }
    }
  }

 private:
  PartialColoring& chi_;
  RunEnv& env_;
  std::vector<ShannonFan> fans_;
  std::vector<char> alive_;
  std::vector<char> primed_;
  std::vector<int> live_ids_;
  absl::flat_hash_map<Vertex, int> owner_;
  std::vector<int> scratch_;
  int alive_count_ = 0;
  int colored_ = 0;
};

// Walks the {a, b} path from x within the budget; false if it runs out.
bool walk_budgeted(const PartialColoring& chi, Vertex x, Color a, Color b, size_t& budget, AlternatingPath& out) {
  chi.walk_alternating(x, a, b, budget, out);
  if (!out.is_maximal) {
    budget = 0;
    return false;
  }
  budget -= out.length();
  return true;
}

// Moves fan `id` to {a, b}. Fails without touching the coloring when a path
// runs out of budget or ends at a primed fan.
bool prime_one(PartialColoring& chi, FanPool& pool, int id, Color a, Color b, size_t budget,
               std::vector<PaletteLoss>& journal, RunEnv& env) {
  ShannonFan s = pool.fan(id);
  if (s.gamma == a || s.gamma == b) return false;
  AlternatingPath pu, pv, pw;
  auto blocked = [&](const AlternatingPath& p) { return !p.empty() && pool.touches_primed(p.end); };
  bool ok = true;
  {
    JournalScope scope(chi, journal);
    if (s.alpha != a && !chi.is_missing(s.u, a)) {
      if (!walk_budgeted(chi, s.u, a, s.alpha, budget, pu) || blocked(pu)) {
        ok = false;
      } else {
        chi.flip(pu);
      }
    }
    if (ok && s.beta != b) {
      for (Vertex leaf : {s.v, s.w}) {
        if (chi.is_missing(leaf, b) || !chi.is_missing(leaf, s.beta)) continue;
        AlternatingPath& p = leaf == s.v ? pv : pw;
        if (!walk_budgeted(chi, leaf, b, s.beta, budget, p) || blocked(p)) {
          ok = false;
          break;
        }
        chi.flip(p);
      }
    }
  }
  if (!ok) env.count(Counter::prime_budget_failures);
  env.count(Counter::flips, static_cast<int64_t>(!pu.empty()) + !pv.empty() + !pw.empty());
  ShannonFan primed = s;
  primed.alpha = a;
  primed.beta = b;
  pool.absorb(journal, id);
  if (ok && is_valid(chi, primed)) {
    pool.set_fan(id, primed);
    return true;
  }
  if (!is_valid(chi, pool.fan(id))) pool.repair(id);
  return false;
}

}  // namespace

int color_shannon_fans(PartialColoring& chi, std::span<const ShannonFan> fans, int delta, Rng& rng, RunEnv& env) {
  FanPool pool(chi, fans, env);
  const int m = chi.graph().num_edges();
  const int iterations = std::max(1, delta / 2);
  std::vector<PaletteLoss> journal;
  std::vector<int> primed;
  env.count(Counter::color_ufans_calls);
  for (int it = 0; it < iterations && pool.alive_count() > 0; ++it) {
    env.check_deadline();
    if (chi.palette_size() < 2) break;
    std::vector<Color> least = chi.least_common_colors(2);
    const Color a = least[0];
    const Color b = least[1];
    const int lambda = pool.alive_count();
    const int target = std::max(1, (lambda + 48 * std::max(1, delta) - 1) / (48 * std::max(1, delta)));
    const size_t budget = std::max<size_t>(64, 128 * static_cast<size_t>(m) / static_cast<size_t>(lambda));

    std::vector<int> order = pool.live_ids();
    rng.shuffle(std::span<int>(order));
    primed.clear();
    env.count(Counter::prime_calls);
    for (int id : order) {
      if (static_cast<int>(primed.size()) >= target) break;
      if (!pool.alive(id)) continue;
      env.count(Counter::prime_iterations);
      if (prime_one(chi, pool, id, a, b, budget, journal, env)) {
        pool.set_primed(id, true);
        primed.push_back(id);
        env.count(Counter::prime_successes);
      }
    }

    env.count(Counter::activate_calls);
    for (int id : primed) {
      if (!pool.alive(id) || !pool.is_primed(id)) continue;
      ShannonFan s = pool.fan(id);
      if (!is_valid(chi, s) || s.alpha != a || s.beta != b) {
        pool.repair(id);
        continue;
      }
      {
        JournalScope scope(chi, journal);
        ShannonActivation act = activate_shannon_fan(chi, s);
        env.count(Counter::flips);
        env.count(Counter::flip_length, static_cast<int64_t>(act.path_length));
      }
      pool.note_colored(id);
      env.count(Counter::activate_colored);
      pool.absorb(journal, id);
    }
    if (env.debug()) {
      pool.audit();
      chi.audit();
    }
  }
  env.count(Counter::shannon_fans, pool.colored());
  env.count(Counter::color_ufans_colored, pool.colored());
  return pool.colored();
}

namespace {

void cleanup_edge(PartialColoring& chi, EdgeId e, RunEnv& env) {
  if (chi.is_colored(e)) return;
  if (std::optional<ShannonFan> s = create_shannon_fan(chi, e)) activate_shannon_fan(chi, *s);
  env.count(Counter::shannon_cleanup_edges);
}

}  // namespace

int shannon_extend(PartialColoring& chi, std::span<const EdgeId> matching, int delta, Rng& rng, RunEnv& env) {
  if (delta < chi.graph().max_degree() || chi.palette_size() < shannon_palette(delta)) {
    throw ContractError("shannon_extend: palette " + std::to_string(chi.palette_size()) + " too small for delta " +
                        std::to_string(delta));
  }
  const Graph& g = chi.graph();
  std::vector<EdgeId> remaining;
  for (EdgeId e : matching) {
    if (!chi.is_colored(e)) remaining.push_back(e);
  }
  const int initial = static_cast<int>(remaining.size());
  if (env.debug()) {
    std::vector<char> seen(g.num_vertices(), 0);
    for (EdgeId e : remaining) {
      for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
        if (seen[x]) throw ContractError("shannon_extend: uncolored edges do not form a matching");
        seen[x] = 1;
      }
    }
  }
  auto prune = [&] { std::erase_if(remaining, [&](EdgeId e) { return chi.is_colored(e); }); };

  while (!remaining.empty()) {
    env.check_deadline();
    const int lambda = static_cast<int>(remaining.size());
    const int uncolored_before = chi.uncolored_count();
    int direct = 0;
    for (EdgeId e : remaining) {
      Color c = chi.common_missing(g.edge(e).u, g.edge(e).v);
      if (c == kUncolored) continue;
      chi.set_color(e, c);
      ++direct;
    }
    env.count(Counter::shannon_direct, direct);
    prune();
    if (2 * direct < lambda && !remaining.empty()) {
      std::vector<PreShannonFan> pre = construct_pre_shannon_fans(chi, remaining, env);
      std::vector<ShannonFan> fans;
      int upgraded = 0;
      for (const PreShannonFan& p : pre) {
        if (std::optional<ShannonFan> s = upgrade_pre_shannon_fan(chi, p)) {
          fans.push_back(*s);
        } else {
          ++upgraded;
        }
      }
      env.count(Counter::shannon_direct, upgraded);
      if (2 * upgraded < static_cast<int>(pre.size())) color_shannon_fans(chi, fans, delta, rng, env);
      prune();
    }
    if (chi.uncolored_count() >= uncolored_before && !remaining.empty()) {
      cleanup_edge(chi, remaining.front(), env);
      prune();
    }
    if (env.debug()) chi.audit();
  }
  return initial;
}

namespace {

PartialColoring solve_shannon(const Graph& g, int depth, RunEnv& env) {
  env.check_deadline();
  env.stats().raise(Counter::recursion_depth, depth);
  const int m = g.num_edges();
  const int delta = g.max_degree();
  const int palette = shannon_palette(delta);
  PartialColoring chi(g, palette);
  if (m == 0) return chi;
  if (delta <= 2 || m <= env.options().base_case_edges) {
    for (EdgeId e = 0; e < m; ++e) cleanup_edge(chi, e, env);
    env.count(Counter::base_case_edges, m);
    return chi;
  }
  std::array<Graph, 2> parts = split_graph(g);
  std::array<std::vector<Color>, 2> colors;
  for (int s = 0; s < 2; ++s) colors[s] = colors_of(solve_shannon(parts[s], depth + 1, env));
  MergedColoring merged = merge_colorings(g, parts, colors, palette);
  env.count(Counter::merges);
  apply_colors(chi, merged.colors);
  Rng rng = env.fresh_rng();
  for (const std::vector<EdgeId>& cls : merged.dropped) shannon_extend(chi, cls, delta, rng, env);
  for (EdgeId e : chi.uncolored_edges()) cleanup_edge(chi, e, env);
  if (env.debug()) chi.audit();
  return chi;
}

}  // namespace

PartialColoring shannon_color(const Graph& g, RunEnv& env) { return solve_shannon(g, 0, env); }

}  // namespace edgecolor
