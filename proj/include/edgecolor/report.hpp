#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "edgecolor/coloring.hpp"
#include "edgecolor/workspace.hpp"

namespace edgecolor {

struct RunReport {
  std::string algorithm;
  int n = 0;
  int m = 0;
  int delta = 0;
  int mu = 0;
  int palette_bound = 0;
  int colors_used = 0;
  int uncolored_remaining = 0;
  bool proper = false;
  int64_t wall_time_ns = 0;
  uint64_t seed = 0;
  RunStats counters;
};

RunReport make_report(const std::string& algorithm, const PartialColoring& chi, int palette_bound,
                      int64_t wall_time_ns, const RunEnv& env);

nlohmann::ordered_json to_json(const RunReport& report);
std::string to_json_string(const RunReport& report, int indent = 2);

}  // namespace edgecolor
