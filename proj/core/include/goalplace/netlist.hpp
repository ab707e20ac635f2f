#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace goalplace {

enum class CellKind { std_cell, macro, filler, buffer };

const char* to_string(CellKind kind);
CellKind cell_kind_from_string(const std::string& s);

struct PinOffset {
  double dx = 0.0;
  double dy = 0.0;
};

struct Cell {
  int id = -1;
  std::string name;           // full hierarchical path, "/"-separated
  double width = 0.0;
  double height = 0.0;
  CellKind kind = CellKind::std_cell;
  bool movable = true;
  std::vector<PinOffset> pins;  // offsets from the cell origin
  std::optional<double> slack;  // worst slack in ns, from an external report

  double area() const { return width * height; }
  bool is_filler() const { return kind == CellKind::filler; }
  bool is_macro() const { return kind == CellKind::macro; }
};

struct NetPin {
  int cell = -1;
  int pin = 0;  // index into Cell::pins
};

struct Net {
  int id = -1;
  std::vector<NetPin> pins;

  int cardinality() const { return static_cast<int>(pins.size()); }
};

struct Floorplan {
  double x = 0.0;
  double y = 0.0;
  double width = 0.0;
  double height = 0.0;

  double area() const { return width * height; }
};

struct Netlist {
  std::vector<Cell> cells;
  std::vector<Net> nets;
  Floorplan floorplan;
  double site_width = 1.0;
  double row_height = 1.0;

  std::size_t num_cells() const { return cells.size(); }

  /// Applies the "zero" size convention: sets width/height to one site by
  /// one row, which is what zero-sized provisioning cells occupy.
  void set_zero_size(Cell& cell) const {
    cell.width = site_width;
    cell.height = row_height;
  }

  /// Checks id contiguity, positive sizes, floorplan and net references;
  /// throws InputError describing the first violation.
  void validate() const;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Placement {
  std::vector<Point> positions;  // per-cell origin, indexed by cell id
  std::string frame_id;
};

using SizeTable = std::unordered_map<std::string, std::pair<double, double>>;
using SlackTable = std::unordered_map<std::string, double>;

std::unordered_map<std::string, int> make_name_index(const Netlist& nl);

/// Per §"matching pipeline": which place/post-route cells lined up.
/// matched + zeroed + removed buffers partition the post-route std cells.
struct MatchReport {
  std::vector<std::pair<std::string, std::string>> matched;  // (place, postroute)
  int removed_buffers = 0;
  std::vector<std::string> zeroed;      // post-route-only std cells
  std::vector<std::string> place_only;  // place cells never seen post-route
};

/// The raw target geometry: matched cells at post-route positions with
/// post-synthesis sizes, plus zero-sized provisioning cells. `place_cell`
/// maps each geometry cell back to its id in the place netlist (-1 for the
/// zero-sized extras).
struct MatchedGeometry {
  Netlist netlist;  // nets are not carried over; densities only need rects
  Placement placement;
  std::vector<int> place_cell;
  MatchReport report;
};

MatchedGeometry match_netlists(const Netlist& place, const Netlist& postroute,
                               const Placement& postroute_positions,
                               const SizeTable& postsynth_sizes);

/// Attaches slacks by name; cells absent from the table keep nullopt.
void apply_slacks(Netlist& nl, const SlackTable& slacks);

}  // namespace goalplace
