#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json_io.hpp"

namespace lcmcap {

// A deterministic experiment bundle: named files in config order plus a JSON
// summary (also included as "summary.json"). Two runs of the same config
// produce byte-identical bundles, whatever the worker count.
struct ReportBundle {
  std::vector<std::pair<std::string, std::string>> files;
  Json summary;
  int hard_failures = 0;
};

// Config shape: {"seed": <uint>, "experiments": [{"name": ..., "kind":
// "hl-trend"|"gb-sweep"|"fk-table", ...kind-specific keys}]}. Unknown keys
// anywhere are rejected up front (InvalidInput). jobs >= 1 runs experiments
// in parallel; each experiment is internally deterministic.
ReportBundle run_report(const Json& config, int jobs = 1);

}  // namespace lcmcap
