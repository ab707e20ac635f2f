#pragma once

#include <string>
#include <vector>

#include "goalplace/netlist.hpp"
#include "goalplace/targets.hpp"

namespace goalplace {

struct GridParams {
  double origin_x = 0.0;
  double origin_y = 0.0;
  double bin_w = 0.0;
  double bin_h = 0.0;
  int nx = 0;
  int ny = 0;

  int num_bins() const { return nx * ny; }
  int bin_index(int bx, int by) const { return by * nx + bx; }
};

/// 2D bin grid over the floorplan with per-bin occupied area. Bins are
/// square with side bin_scale * row_height; boundary bins are clipped to the
/// floorplan so a full bin always means density 1.
class DensityGrid {
 public:
  DensityGrid(GridParams params, std::vector<double> occupied, std::vector<double> bin_area)
      : params_(params), occupied_(std::move(occupied)), bin_area_(std::move(bin_area)) {}

  const GridParams& params() const { return params_; }
  const std::vector<double>& occupied() const { return occupied_; }
  double bin_area(int b) const { return bin_area_[b]; }
  double rho(int b) const { return occupied_[b] / bin_area_[b]; }
  double rho(int bx, int by) const { return rho(params_.bin_index(bx, by)); }

  double total_occupied() const;

 private:
  GridParams params_;
  std::vector<double> occupied_;
  std::vector<double> bin_area_;
};

struct GridOptions {
  double bin_scale = 10.0;      // bin side = bin_scale * row_height
  bool include_fillers = false; // placer-internal grids turn this on
};

GridParams make_grid_params(const Netlist& nl, double bin_scale);

DensityGrid build_grid(const Netlist& nl, const Placement& placement,
                       const GridOptions& options = {});

struct CellDensityVector {
  std::vector<double> values;  // rho_i per cell id
  GridParams grid;
};

/// rho_i = sum_b rho_b * OA(i,b) / a_i over the bins the cell overlaps.
CellDensityVector cell_density(const DensityGrid& grid, const Netlist& nl,
                               const Placement& placement);

struct ToolTargetResult {
  TargetVector targets;      // z over the place netlist, provenance "tool"
  MatchedGeometry geometry;  // the matched post-route geometry it came from
  CellDensityVector geometry_density;
};

/// Full raw-target pipeline: match the netlists, grid the matched geometry,
/// read each place cell's density off it. Place-only cells receive the mean
/// of the matched targets.
ToolTargetResult tool_target(const Netlist& place, const Netlist& postroute,
                             const Placement& postroute_positions,
                             const SizeTable& postsynth_sizes, double bin_scale = 10.0);

/// ny rows by nx columns of rho_b, top row = highest y.
void write_density_csv(const DensityGrid& grid, const std::string& path);

/// Binary 8-bit PGM, rho clamped to [0,1] and scaled to 0..255.
void write_density_pgm(const DensityGrid& grid, const std::string& path);

}  // namespace goalplace
