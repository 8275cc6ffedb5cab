#include "edgecolor/report.hpp"

#include <algorithm>
#include <string_view>

#include "edgecolor/recursion.hpp"
#include "edgecolor/validate.hpp"

namespace edgecolor {

RunReport make_report(const std::string& algorithm, const PartialColoring& chi, int palette_bound,
                      int64_t wall_time_ns, const RunEnv& env) {
  const Graph& g = chi.graph();
  std::vector<Color> colors = colors_of(chi);
  Verdict verdict = validate_coloring(g, colors, palette_bound);
  RunReport r;
  r.algorithm = algorithm;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.delta = g.max_degree();
  r.mu = std::max(1, g.max_multiplicity());
  r.palette_bound = palette_bound;
  r.colors_used = verdict.colors_used;
  r.uncolored_remaining = verdict.uncolored;
  r.proper = verdict.proper && verdict.palette_ok;
  r.wall_time_ns = wall_time_ns;
  r.seed = env.options().seed;
  r.counters = env.stats();
  return r;
}

nlohmann::ordered_json to_json(const RunReport& report) {
  nlohmann::ordered_json counters = nlohmann::ordered_json::object();
  for (int i = 0; i < RunStats::kCount; ++i) {
    auto c = static_cast<Counter>(i);
    counters[std::string(counter_name(c))] = report.counters.get(c);
  }
  nlohmann::ordered_json j;
  j["algorithm"] = report.algorithm;
  j["n"] = report.n;
  j["m"] = report.m;
  j["delta"] = report.delta;
  j["mu"] = report.mu;
  j["palette_bound"] = report.palette_bound;
  j["colors_used"] = report.colors_used;
  j["uncolored_remaining"] = report.uncolored_remaining;
  j["proper"] = report.proper;
  j["wall_time_ns"] = report.wall_time_ns;
  j["rng_seed"] = report.seed;
  j["counters"] = std::move(counters);
  return j;
}

std::string to_json_string(const RunReport& report, int indent) {
  return to_json(report).dump(indent);
}

}  // namespace edgecolor
