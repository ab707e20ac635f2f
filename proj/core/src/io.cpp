#include "goalplace/io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "goalplace/common.hpp"
#include "json.hpp"

namespace goalplace {

using nlohmann::json;

namespace {

json parse_line(const std::string& line, const std::string& path, std::size_t lineno) {
  try {
    return json::parse(line);
  } catch (const json::exception& e) {
    throw InputError(path + ":" + std::to_string(lineno) + ": malformed record: " + e.what());
  }
}

[[noreturn]] void fail(const std::string& path, std::size_t lineno, const std::string& msg) {
  throw InputError(path + ":" + std::to_string(lineno) + ": " + msg);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path);
  return out;
}

Netlist parse_jsonl(const std::string& path) {
  std::ifstream in = open_input(path);
  Netlist nl;
  bool have_header = false;

  struct PendingNet {
    int id;
    std::vector<std::pair<std::string, int>> pins;
    std::size_t lineno;
  };
  std::vector<PendingNet> pending_nets;
  std::unordered_map<std::string, int> name_index;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json rec = parse_line(line, path, lineno);
    try {
      if (rec.contains("floorplan")) {
        auto fp = rec.at("floorplan");
        if (!fp.is_array() || fp.size() != 4) fail(path, lineno, "floorplan must be [x,y,W,H]");
        nl.floorplan = {fp[0].get<double>(), fp[1].get<double>(), fp[2].get<double>(),
                        fp[3].get<double>()};
        nl.site_width = rec.at("site_w").get<double>();
        nl.row_height = rec.at("row_h").get<double>();
        have_header = true;
      } else if (rec.contains("cell")) {
        Cell c;
        c.id = static_cast<int>(nl.cells.size());
        c.name = rec.at("cell").get<std::string>();
        c.width = rec.at("w").get<double>();
        c.height = rec.at("h").get<double>();
        c.kind = cell_kind_from_string(rec.value("kind", std::string("std_cell")));
        c.movable = rec.value("movable", true);
        if (rec.contains("pins")) {
          for (const auto& p : rec.at("pins"))
            c.pins.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
        }
        if (rec.contains("slack")) c.slack = rec.at("slack").get<double>();
        auto [it, inserted] = name_index.emplace(c.name, c.id);
        (void)it;
        if (!inserted) fail(path, lineno, "duplicate cell name: " + c.name);
        nl.cells.push_back(std::move(c));
      } else if (rec.contains("net")) {
        PendingNet pn;
        pn.id = rec.at("net").get<int>();
        pn.lineno = lineno;
        for (const auto& p : rec.at("pins"))
          pn.pins.emplace_back(p.at(0).get<std::string>(), p.at(1).get<int>());
        pending_nets.push_back(std::move(pn));
      } else {
        fail(path, lineno, "record is neither header, cell, nor net");
      }
    } catch (const json::exception& e) {
      fail(path, lineno, std::string("malformed record: ") + e.what());
    }
  }

  if (!have_header) throw InputError(path + ": missing header record with floorplan");

  for (const PendingNet& pn : pending_nets) {
    Net net;
    net.id = pn.id;
    for (const auto& [cell_name, pin_idx] : pn.pins) {
      auto it = name_index.find(cell_name);
      if (it == name_index.end())
        fail(path, pn.lineno, "dangling pin: net " + std::to_string(pn.id) +
                                  " references unknown cell " + cell_name);
      if (pin_idx < 0 || pin_idx >= static_cast<int>(nl.cells[it->second].pins.size()))
        fail(path, pn.lineno, "pin index " + std::to_string(pin_idx) +
                                  " out of range on cell " + cell_name);
      net.pins.push_back({it->second, pin_idx});
    }
    nl.nets.push_back(std::move(net));
  }

  nl.validate();
  return nl;
}

// --------------------------------------------------------------------------
// Bookshelf subset. Comment lines start with '#'; tokens are whitespace or
// ':' separated. Pin offsets in .nets are measured from the cell center and
// are converted to origin-based offsets here.

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : line) {
    if (ch == '#') break;
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ':') {
      if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) toks.push_back(std::move(cur));
  return toks;
}

double to_double(const std::string& tok, const std::string& path, std::size_t lineno) {
  try {
    std::size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(path, lineno, "expected a number, got '" + tok + "'");
  }
}

struct BookshelfFiles {
  std::string nodes, nets, pl, scl;
};

BookshelfFiles parse_aux(const std::string& aux_path) {
  std::ifstream in = open_input(aux_path);
  std::string line;
  std::getline(in, line);
  BookshelfFiles files;
  auto dir = std::filesystem::path(aux_path).parent_path();
  for (const std::string& tok : tokenize(line)) {
    auto ext = std::filesystem::path(tok).extension().string();
    std::string full = (dir / tok).string();
    if (ext == ".nodes") files.nodes = full;
    else if (ext == ".nets") files.nets = full;
    else if (ext == ".pl") files.pl = full;
    else if (ext == ".scl") files.scl = full;
  }
  if (files.nodes.empty() || files.nets.empty() || files.pl.empty() || files.scl.empty())
    throw InputError(aux_path + ": aux file must list .nodes, .nets, .pl and .scl");
  return files;
}

Netlist parse_bookshelf(const std::string& aux_path) {
  BookshelfFiles files = parse_aux(aux_path);
  Netlist nl;
  std::unordered_map<std::string, int> name_index;

  {  // .nodes
    std::ifstream in = open_input(files.nodes);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto toks = tokenize(line);
      if (toks.empty() || toks[0] == "UCLA" || toks[0] == "NumNodes" || toks[0] == "NumTerminals")
        continue;
      if (toks.size() < 3) fail(files.nodes, lineno, "node entry needs name, width, height");
      Cell c;
      c.id = static_cast<int>(nl.cells.size());
      c.name = toks[0];
      c.width = to_double(toks[1], files.nodes, lineno);
      c.height = to_double(toks[2], files.nodes, lineno);
      bool terminal = toks.size() > 3 && toks[3].rfind("terminal", 0) == 0;
      c.movable = !terminal;
      c.kind = terminal ? CellKind::macro : CellKind::std_cell;
      auto [it, inserted] = name_index.emplace(c.name, c.id);
      (void)it;
      if (!inserted) fail(files.nodes, lineno, "duplicate cell name: " + c.name);
      nl.cells.push_back(std::move(c));
    }
  }

  {  // .nets
    std::ifstream in = open_input(files.nets);
    std::string line;
    std::size_t lineno = 0;
    int remaining = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto toks = tokenize(line);
      if (toks.empty() || toks[0] == "UCLA" || toks[0] == "NumNets" || toks[0] == "NumPins")
        continue;
      if (toks[0] == "NetDegree") {
        if (toks.size() < 2) fail(files.nets, lineno, "NetDegree without a degree");
        remaining = static_cast<int>(to_double(toks[1], files.nets, lineno));
        nl.nets.push_back({static_cast<int>(nl.nets.size()), {}});
        continue;
      }
      if (remaining <= 0) fail(files.nets, lineno, "pin entry outside of a net");
      auto it = name_index.find(toks[0]);
      if (it == name_index.end())
        fail(files.nets, lineno, "dangling pin: unknown cell " + toks[0]);
      Cell& cell = nl.cells[it->second];
      double dx = cell.width / 2, dy = cell.height / 2;
      if (toks.size() >= 4) {
        dx += to_double(toks[2], files.nets, lineno);
        dy += to_double(toks[3], files.nets, lineno);
      }
      cell.pins.push_back({dx, dy});
      nl.nets.back().pins.push_back({it->second, static_cast<int>(cell.pins.size()) - 1});
      --remaining;
    }
  }

  {  // .scl: derive floorplan, row height and site width from the core rows
    std::ifstream in = open_input(files.scl);
    std::string line;
    std::size_t lineno = 0;
    double y = 0, h = 0, sw = 0, x0 = 0;
    int nsites = 0;
    bool in_row = false, any_row = false;
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto toks = tokenize(line);
      if (toks.empty()) continue;
      if (toks[0] == "CoreRow") { in_row = true; continue; }
      if (!in_row) continue;
      if (toks[0] == "Coordinate") y = to_double(toks[1], files.scl, lineno);
      else if (toks[0] == "Height") h = to_double(toks[1], files.scl, lineno);
      else if (toks[0] == "Sitewidth") sw = to_double(toks[1], files.scl, lineno);
      else if (toks[0] == "SubrowOrigin") {
        x0 = to_double(toks[1], files.scl, lineno);
        for (std::size_t i = 2; i + 1 < toks.size(); ++i)
          if (toks[i] == "NumSites") nsites = static_cast<int>(to_double(toks[i + 1], files.scl, lineno));
      } else if (toks[0] == "End") {
        if (!any_row) {
          min_x = x0; max_x = x0 + sw * nsites; min_y = y; max_y = y + h;
        } else {
          min_x = std::min(min_x, x0); max_x = std::max(max_x, x0 + sw * nsites);
          min_y = std::min(min_y, y); max_y = std::max(max_y, y + h);
        }
        any_row = true;
        in_row = false;
        nl.row_height = h;
        nl.site_width = sw;
      }
    }
    if (!any_row) throw InputError(files.scl + ": no core rows found");
    nl.floorplan = {min_x, min_y, max_x - min_x, max_y - min_y};
  }

  {  // .pl: initial positions become part of the netlist file's sidecar; we
     // keep the netlist itself position-free but still validate the entries.
    std::ifstream in = open_input(files.pl);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto toks = tokenize(line);
      if (toks.empty() || toks[0] == "UCLA") continue;
      if (name_index.find(toks[0]) == name_index.end())
        fail(files.pl, lineno, "placement entry for unknown cell " + toks[0]);
    }
  }

  nl.validate();
  return nl;
}

}  // namespace

Netlist parse_netlist(const std::string& path, NetlistFormat format) {
  switch (format) {
    case NetlistFormat::jsonl: return parse_jsonl(path);
    case NetlistFormat::bookshelf_like: return parse_bookshelf(path);
  }
  throw InputError("unknown netlist format");
}

void save_netlist(const Netlist& nl, const std::string& path) {
  std::ofstream out = open_output(path);
  json header = {{"floorplan", {nl.floorplan.x, nl.floorplan.y, nl.floorplan.width, nl.floorplan.height}},
                 {"site_w", nl.site_width},
                 {"row_h", nl.row_height}};
  out << header.dump() << '\n';
  for (const Cell& c : nl.cells) {
    json rec = {{"cell", c.name}, {"w", c.width},       {"h", c.height},
                {"kind", to_string(c.kind)}, {"movable", c.movable}};
    if (!c.pins.empty()) {
      json pins = json::array();
      for (const PinOffset& p : c.pins) pins.push_back({p.dx, p.dy});
      rec["pins"] = pins;
    }
    if (c.slack) rec["slack"] = *c.slack;
    out << rec.dump() << '\n';
  }
  for (const Net& net : nl.nets) {
    json pins = json::array();
    for (const NetPin& p : net.pins) pins.push_back({nl.cells[p.cell].name, p.pin});
    json rec = {{"net", net.id}, {"pins", pins}};
    out << rec.dump() << '\n';
  }
}

Placement load_placement(const std::string& path, const Netlist& nl) {
  std::ifstream in = open_input(path);
  auto index = make_name_index(nl);
  Placement pl;
  pl.positions.assign(nl.cells.size(), Point{});
  std::vector<bool> seen(nl.cells.size(), false);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json rec = parse_line(line, path, lineno);
    try {
      std::string name = rec.at("cell").get<std::string>();
      auto it = index.find(name);
      if (it == index.end()) fail(path, lineno, "placement names unknown cell " + name);
      pl.positions[it->second] = {rec.at("x").get<double>(), rec.at("y").get<double>()};
      seen[it->second] = true;
    } catch (const json::exception& e) {
      fail(path, lineno, std::string("malformed record: ") + e.what());
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw InputError(path + ": no position for cell " + nl.cells[i].name);
  pl.frame_id = std::filesystem::path(path).stem().string();
  return pl;
}

void save_placement(const Placement& placement, const Netlist& nl, const std::string& path) {
  if (placement.positions.size() != nl.cells.size())
    throw InputError("placement size does not match netlist");
  std::ofstream out = open_output(path);
  for (const Cell& c : nl.cells) {
    json rec = {{"cell", c.name},
                {"x", placement.positions[c.id].x},
                {"y", placement.positions[c.id].y}};
    out << rec.dump() << '\n';
  }
}

SizeTable load_size_table(const std::string& path) {
  std::ifstream in = open_input(path);
  SizeTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json rec = parse_line(line, path, lineno);
    try {
      table[rec.at("cell").get<std::string>()] = {rec.at("w").get<double>(),
                                                  rec.at("h").get<double>()};
    } catch (const json::exception& e) {
      fail(path, lineno, std::string("malformed record: ") + e.what());
    }
  }
  return table;
}

SlackTable load_slacks(const std::string& path) {
  std::ifstream in = open_input(path);
  SlackTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json rec = parse_line(line, path, lineno);
    try {
      table[rec.at("cell").get<std::string>()] = rec.at("slack").get<double>();
    } catch (const json::exception& e) {
      fail(path, lineno, std::string("malformed record: ") + e.what());
    }
  }
  return table;
}

}  // namespace goalplace
