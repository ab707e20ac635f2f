#include "goalplace/targets.hpp"

#include <fstream>

#include "goalplace/common.hpp"
#include "json.hpp"

namespace goalplace {

using nlohmann::json;

void save_targets(const TargetVector& targets, const Netlist& nl, const std::string& path) {
  if (targets.values.size() != nl.cells.size())
    throw InputError("target vector does not match netlist size");
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path);
  out << json{{"provenance", targets.provenance}}.dump() << '\n';
  for (const Cell& c : nl.cells)
    out << json{{"cell", c.name}, {"t", targets.values[c.id]}}.dump() << '\n';
}

TargetVector load_targets(const std::string& path, const Netlist& nl) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  auto index = make_name_index(nl);
  TargetVector tv;
  tv.values.assign(nl.cells.size(), 0.0);
  std::vector<bool> seen(nl.cells.size(), false);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
      if (rec.contains("provenance")) {
        tv.provenance = rec.at("provenance").get<std::string>();
        continue;
      }
      std::string name = rec.at("cell").get<std::string>();
      auto it = index.find(name);
      if (it == index.end())
        throw InputError(path + ":" + std::to_string(lineno) +
                         ": target for cell not in netlist: " + name);
      tv.values[it->second] = rec.at("t").get<double>();
      seen[it->second] = true;
    } catch (const json::exception& e) {
      throw InputError(path + ":" + std::to_string(lineno) + ": malformed record: " + e.what());
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw InputError(path + ": no target for cell " + nl.cells[i].name);
  return tv;
}

}  // namespace goalplace
