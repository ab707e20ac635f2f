#include "goalplace/netlist.hpp"

#include <algorithm>

#include "goalplace/common.hpp"

namespace goalplace {

const char* to_string(CellKind kind) {
  switch (kind) {
    case CellKind::std_cell: return "std_cell";
    case CellKind::macro: return "macro";
    case CellKind::filler: return "filler";
    case CellKind::buffer: return "buffer";
  }
  return "std_cell";
}

CellKind cell_kind_from_string(const std::string& s) {
  if (s == "std_cell") return CellKind::std_cell;
  if (s == "macro") return CellKind::macro;
  if (s == "filler") return CellKind::filler;
  if (s == "buffer") return CellKind::buffer;
  throw InputError("unknown cell kind: " + s);
}

void Netlist::validate() const {
  if (floorplan.width <= 0 || floorplan.height <= 0)
    throw InputError("floorplan dimensions must be positive");
  if (site_width <= 0 || row_height <= 0)
    throw InputError("site width and row height must be positive");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i];
    if (c.id != static_cast<int>(i))
      throw InputError("cell ids are not contiguous at index " + std::to_string(i));
    if (c.width <= 0 || c.height <= 0)
      throw InputError("cell has non-positive size: " + c.name);
  }
  for (const Net& net : nets) {
    if (net.pins.empty())
      throw InputError("net " + std::to_string(net.id) + " has no pins");
    for (const NetPin& p : net.pins) {
      if (p.cell < 0 || p.cell >= static_cast<int>(cells.size()))
        throw InputError("dangling pin: net " + std::to_string(net.id) +
                         " references missing cell id " + std::to_string(p.cell));
      if (p.pin < 0 || p.pin >= static_cast<int>(cells[p.cell].pins.size()))
        throw InputError("pin index out of range on cell " + cells[p.cell].name);
    }
  }
}

std::unordered_map<std::string, int> make_name_index(const Netlist& nl) {
  std::unordered_map<std::string, int> index;
  index.reserve(nl.cells.size());
  for (const Cell& c : nl.cells) {
    auto [it, inserted] = index.emplace(c.name, c.id);
    if (!inserted) throw InputError("duplicate cell name: " + c.name);
  }
  return index;
}

MatchedGeometry match_netlists(const Netlist& place, const Netlist& postroute,
                               const Placement& postroute_positions,
                               const SizeTable& postsynth_sizes) {
  if (postroute_positions.positions.size() != postroute.cells.size())
    throw InputError("post-route placement does not cover the post-route netlist");

  auto place_index = make_name_index(place);
  make_name_index(postroute);  // rejects duplicate post-route names

  // Canonical name order makes the result a pure function of the name sets.
  std::vector<int> order(postroute.cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return postroute.cells[a].name < postroute.cells[b].name;
  });

  MatchedGeometry out;
  out.netlist.floorplan = postroute.floorplan;
  out.netlist.site_width = postroute.site_width;
  out.netlist.row_height = postroute.row_height;
  out.place_cell.reserve(postroute.cells.size());

  std::vector<bool> place_matched(place.cells.size(), false);

  for (int pr_id : order) {
    const Cell& pr = postroute.cells[pr_id];
    if (pr.kind == CellKind::buffer) {
      ++out.report.removed_buffers;  // step (1): buffers contribute nothing
      continue;
    }
    if (pr.kind == CellKind::filler) continue;

    Cell geom = pr;
    geom.id = static_cast<int>(out.netlist.cells.size());
    auto it = place_index.find(pr.name);
    if (it != place_index.end()) {
      // step (2): matched cells take post-route positions, post-synthesis sizes
      auto size_it = postsynth_sizes.find(pr.name);
      if (size_it == postsynth_sizes.end())
        throw InputError("post-synthesis size table is missing cell " + pr.name);
      geom.width = size_it->second.first;
      geom.height = size_it->second.second;
      place_matched[it->second] = true;
      out.report.matched.emplace_back(place.cells[it->second].name, pr.name);
      out.place_cell.push_back(it->second);
    } else if (pr.kind == CellKind::macro) {
      throw InputError("post-route macro has no counterpart in the place netlist: " + pr.name);
    } else {
      // step (3): post-route-only std cells provision space at zero size
      out.netlist.set_zero_size(geom);
      out.report.zeroed.push_back(pr.name);
      out.place_cell.push_back(-1);
    }
    out.netlist.cells.push_back(std::move(geom));
    out.placement.positions.push_back(postroute_positions.positions[pr.id]);
  }

  if (out.report.matched.empty())
    throw InputError("no matched cells between place and post-route netlists");

  for (const Cell& c : place.cells)
    if (!place_matched[c.id] && c.kind != CellKind::filler)
      out.report.place_only.push_back(c.name);
  std::sort(out.report.place_only.begin(), out.report.place_only.end());

  out.placement.frame_id = "matched:" + postroute_positions.frame_id;
  return out;
}

void apply_slacks(Netlist& nl, const SlackTable& slacks) {
  for (Cell& c : nl.cells) {
    auto it = slacks.find(c.name);
    if (it != slacks.end()) c.slack = it->second;
  }
}

}  // namespace goalplace
