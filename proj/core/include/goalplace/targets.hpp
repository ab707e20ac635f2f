#pragma once

#include <string>
#include <vector>

#include "goalplace/netlist.hpp"

namespace goalplace {

/// Per-cell density targets, indexed by cell id of the netlist they were
/// derived for. `provenance` records how they were produced ("tool", "js",
/// "jsd", "js_hetero", "shifted:<delta>", ...).
struct TargetVector {
  std::vector<double> values;
  std::string provenance;
};

void save_targets(const TargetVector& targets, const Netlist& nl,
                  const std::string& path);

/// Loads targets saved by save_targets and maps them back onto `nl` by cell
/// name. Throws InputError when a netlist cell has no entry or the file
/// names a cell the netlist lacks.
TargetVector load_targets(const std::string& path, const Netlist& nl);

}  // namespace goalplace
