#include "edgecolor/ufan_coloring.hpp"

#include <algorithm>
#include <array>
#include <span>
#include <string>
#include <utility>

namespace edgecolor {

void PrimedSet::add(Handle h, const UComponent& f) {
  fans.insert(h);
  vertices[f.center] = h;
  vertices[f.leaf1] = h;
  vertices[f.leaf2] = h;
}

void PrimedSet::remove(Handle h, const UComponent& f) {
  if (fans.erase(h) == 0) return;
  for (Vertex x : {f.center, f.leaf1, f.leaf2}) {
    auto it = vertices.find(x);
    if (it != vertices.end() && it->second == h) vertices.erase(it);
  }
}

namespace {

// Deletes every component invalidated by the journal; returns how many.
int settle(SeparableCollection& U, PrimedSet* primed, const std::vector<PaletteLoss>& journal,
           std::vector<Handle>& scratch) {
  U.collect_damaged(journal, scratch);
  int removed = 0;
  for (Handle h : scratch) {
    if (!U.contains(h)) continue;
    if (primed != nullptr) primed->remove(h, U.get(h));
    U.erase(h);
    ++removed;
  }
  return removed;
}

// The path is usable when empty or within budget; `budget` shrinks by its length.
bool walk_within(const PartialColoring& chi, Vertex start, Color a, Color b, size_t& budget, AlternatingPath& out) {
  out.edges.clear();
  out.start = out.end = start;
  out.is_maximal = true;
  if (a == b || (chi.is_missing(start, a) && chi.is_missing(start, b))) return true;
  chi.walk_alternating(start, a, b, budget, out);
  if (!out.is_maximal) return false;
  budget -= out.length();
  return true;
}

bool reserved_elsewhere(const SeparableCollection& U, Vertex x, Color c, Handle self) {
  Handle owner = U.find_component(x, c);
  return owner != kNoHandle && owner != self;
}

}  // namespace

void prime_u_fans(PartialColoring& chi, SeparableCollection& U, Color alpha, Color beta, int delta,
                  PrimedSet& primed, Rng& rng, RunEnv& env) {
  const size_t lambda = U.size();
  if (lambda == 0) return;
  env.count(Counter::prime_calls);
  const int64_t m = chi.graph().num_edges();
  const int64_t d = std::max(1, delta);
  const size_t target = std::max<size_t>(1, (lambda + 48 * d - 1) / (48 * d));
  const size_t limit = static_cast<size_t>(std::max<int64_t>(1, 128 * m / static_cast<int64_t>(lambda)));
  const int64_t pair_start = chi.class_size(alpha) + chi.class_size(beta);
  const int64_t watchdog = 256 * static_cast<int64_t>(target);
  int64_t spent = 0;
  int restarts = 0;
  int64_t successes = 0;
  AlternatingPath pu;
  AlternatingPath pv;
  AlternatingPath pw;
  std::vector<PaletteLoss> journal;
  std::vector<Handle> scratch;

  while (primed.size() < target && !U.empty()) {
    env.check_deadline();
    if (spent == watchdog) {
      if (restarts == 4) break;
      ++restarts;
      env.count(Counter::prime_restarts);
      rng = env.fresh_rng();
      spent = 0;
    }
    ++spent;
    env.count(Counter::prime_iterations);

    Handle h = U.sample_uniform(rng);
    const UComponent f = U.get(h);
    if (!f.is_fan()) throw ContractError("prime_u_fans: collection holds a u-edge");
    const Vertex u = f.center;
    const Vertex v = f.leaf1;
    const Vertex w = f.leaf2;
    const Color gamma = f.center_color;
    const Color delta_color = f.leaf_color;
    Color a = alpha;
    Color b = beta;
    if (gamma == beta || delta_color == alpha) std::swap(a, b);

    size_t budget = limit;
    bool within = walk_within(chi, u, a, gamma, budget, pu) && walk_within(chi, v, b, delta_color, budget, pv);
    bool shared = within && !pv.empty() && pv.end == w;
    if (within && !shared) within = walk_within(chi, w, b, delta_color, budget, pw);
    if (shared) pw.edges.clear();
    if (!within) {
      env.count(Counter::prime_budget_failures);
      continue;
    }

    bool touches = primed.touches(u) || primed.touches(v) || primed.touches(w);
    for (const AlternatingPath* p : {&pu, &pv, &pw}) {
      if (!p->empty() && primed.touches(p->end)) touches = true;
    }
    if (touches) continue;
    if ((pu.empty() && reserved_elsewhere(U, u, a, h)) ||
        (pv.empty() && reserved_elsewhere(U, v, b, h)) ||
        (pw.empty() && !shared && reserved_elsewhere(U, w, b, h))) {
      env.count(Counter::prime_conflict_failures);
      continue;
    }

    std::array<size_t, 4> marks{};
    {
      JournalScope scope(chi, journal);
      U.erase(h);
      for (int i = 0; i < 3; ++i) {
        const AlternatingPath* p = std::array{&pu, &pv, &pw}[i];
        marks[i] = journal.size();
        if (p->empty()) continue;
        chi.flip(*p);
        env.count(Counter::flips);
        env.count(Counter::flip_length, static_cast<int64_t>(p->length()));
      }
      marks[3] = journal.size();
    }
    int worst = 0;
    for (int i = 0; i < 3; ++i) {
      U.collect_damaged(std::span(journal).subspan(marks[i], marks[i + 1] - marks[i]), scratch);
      worst = std::max(worst, static_cast<int>(std::count_if(scratch.begin(), scratch.end(),
                                                             [&](Handle x) { return U.contains(x); })));
    }
    int damaged = settle(U, &primed, journal, scratch);
    env.count(Counter::damage_events, damaged);
    env.stats().raise(Counter::max_damage_per_flip, worst);
    if (env.debug() && worst > 2) {
      throw InvariantViolation("prime_u_fans: one flip damaged " + std::to_string(worst) + " components");
    }
    UComponent fresh = UComponent::u_fan(u, v, w, f.edge1, f.edge2, a, b);
    auto added = U.insert(fresh);
    if (!added) throw InvariantViolation("prime_u_fans: re-primed fan is not separable");
    primed.add(*added, fresh);
    ++successes;
    env.count(Counter::prime_successes);

    env.count(Counter::big_u_checks);
    if (2.0 * d * static_cast<double>(U.size()) < (2.0 * d - 1.0) * static_cast<double>(lambda)) {
      env.count(Counter::big_u_violations);
    }
    if (chi.class_size(alpha) + chi.class_size(beta) > pair_start + 6 * successes) {
      env.count(Counter::small_color_violations);
    }
    if (env.debug()) U.audit();
  }
}

int activate_u_fans(PartialColoring& chi, SeparableCollection& U, PrimedSet& primed, RunEnv& env) {
  env.count(Counter::activate_calls);
  const size_t start = primed.size();
  int colored = 0;
  std::vector<PaletteLoss> journal;
  std::vector<Handle> scratch;
  std::set<std::pair<Vertex, Vertex>> flipped;
  AlternatingPath pv;
  AlternatingPath pw;

  while (!primed.empty()) {
    env.check_deadline();
    Handle h = *primed.fans.begin();
    const UComponent f = U.get(h);
    const Color a = f.center_color;
    const Color b = f.leaf_color;
    chi.walk_alternating(f.leaf1, a, b, kUnlimited, pv);
    chi.walk_alternating(f.leaf2, a, b, kUnlimited, pw);
    bool v_ok = pv.empty() || pv.end != f.center;
    bool w_ok = pw.empty() || pw.end != f.center;
    if (!v_ok && !w_ok) throw InvariantViolation("activate_u_fans: both leaf paths end at the center");
    bool use_v = v_ok && (!w_ok || pv.length() <= pw.length());
    const AlternatingPath& path = use_v ? pv : pw;
    EdgeId edge = use_v ? f.edge1 : f.edge2;

    if (env.debug() && !path.empty()) {
      auto key = std::minmax(path.start, path.end);
      if (!flipped.insert(key).second) env.count(Counter::path_packing_violations);
    }

    primed.remove(h, f);
    {
      JournalScope scope(chi, journal);
      U.erase(h);
      if (!path.empty()) {
        chi.flip(path);
        env.count(Counter::flips);
        env.count(Counter::flip_length, static_cast<int64_t>(path.length()));
      }
      chi.set_color(edge, a);
    }
    ++colored;
    int damaged = settle(U, &primed, journal, scratch);
    env.count(Counter::damage_events, damaged);
    env.stats().raise(Counter::max_damage_per_flip, damaged);
    if (env.debug() && damaged > 2) {
      throw InvariantViolation("activate_u_fans: flip at edge " + std::to_string(edge) + " damaged " +
                               std::to_string(damaged) + " components");
    }
  }
  env.count(Counter::activate_colored, colored);
  if (2 * static_cast<size_t>(colored) < start) env.count(Counter::activate_half_violations);
  return colored;
}

int color_u_fans(PartialColoring& chi, SeparableCollection& U, int delta, Rng& rng, RunEnv& env) {
  const size_t lambda = U.size();
  env.count(Counter::color_ufans_calls);
  if (lambda == 0) return 0;
  const int start = chi.colored_count();
  const int iterations = std::max(1, delta / 2);
  bool shrunk = false;
  for (int it = 0; it < iterations && !U.empty(); ++it) {
    auto pair = chi.least_common_colors(2);
    PrimedSet primed;
    prime_u_fans(chi, U, pair[0], pair[1], delta, primed, rng, env);
    activate_u_fans(chi, U, primed, env);
    if (2 * U.size() < lambda) shrunk = true;
  }
  int colored = chi.colored_count() - start;
  env.count(Counter::color_ufans_colored, colored);
  if (shrunk || 200 * static_cast<int64_t>(colored) < static_cast<int64_t>(lambda)) {
    env.count(Counter::color_ufans_bound_violations);
  }
  return colored;
}

}  // namespace edgecolor
