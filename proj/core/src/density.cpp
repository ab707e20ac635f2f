#include "goalplace/density.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "goalplace/common.hpp"

namespace goalplace {

namespace {

struct Rect {
  double lo_x, lo_y, hi_x, hi_y;
  bool empty() const { return lo_x >= hi_x || lo_y >= hi_y; }
};

Rect cell_rect(const Cell& c, const Point& p) {
  return {p.x, p.y, p.x + c.width, p.y + c.height};
}

Rect clip(const Rect& r, const Floorplan& fp) {
  return {std::max(r.lo_x, fp.x), std::max(r.lo_y, fp.y),
          std::min(r.hi_x, fp.x + fp.width), std::min(r.hi_y, fp.y + fp.height)};
}

double overlap_1d(double lo_a, double hi_a, double lo_b, double hi_b) {
  return std::max(0.0, std::min(hi_a, hi_b) - std::max(lo_a, lo_b));
}

// Calls fn(bin_index, overlap_area) for every bin the clipped rect touches.
template <typename Fn>
void for_each_overlap(const GridParams& g, const Rect& r, Fn&& fn) {
  if (r.empty()) return;
  int bx0 = std::clamp(static_cast<int>(std::floor((r.lo_x - g.origin_x) / g.bin_w)), 0, g.nx - 1);
  int bx1 = std::clamp(static_cast<int>(std::floor((r.hi_x - g.origin_x) / g.bin_w)), 0, g.nx - 1);
  int by0 = std::clamp(static_cast<int>(std::floor((r.lo_y - g.origin_y) / g.bin_h)), 0, g.ny - 1);
  int by1 = std::clamp(static_cast<int>(std::floor((r.hi_y - g.origin_y) / g.bin_h)), 0, g.ny - 1);
  for (int by = by0; by <= by1; ++by) {
    double b_lo_y = g.origin_y + by * g.bin_h;
    double oy = overlap_1d(r.lo_y, r.hi_y, b_lo_y, b_lo_y + g.bin_h);
    if (oy <= 0) continue;
    for (int bx = bx0; bx <= bx1; ++bx) {
      double b_lo_x = g.origin_x + bx * g.bin_w;
      double ox = overlap_1d(r.lo_x, r.hi_x, b_lo_x, b_lo_x + g.bin_w);
      if (ox <= 0) continue;
      fn(g.bin_index(bx, by), ox * oy);
    }
  }
}

}  // namespace

double DensityGrid::total_occupied() const {
  double sum = 0;
  for (double v : occupied_) sum += v;
  return sum;
}

GridParams make_grid_params(const Netlist& nl, double bin_scale) {
  if (nl.floorplan.area() <= 0) throw InputError("zero-area floorplan");
  if (bin_scale <= 0) throw InputError("bin_scale must be positive");
  GridParams g;
  double side = bin_scale * nl.row_height;
  g.origin_x = nl.floorplan.x;
  g.origin_y = nl.floorplan.y;
  g.bin_w = side;
  g.bin_h = side;
  g.nx = std::max(1, static_cast<int>(std::ceil(nl.floorplan.width / side - 1e-12)));
  g.ny = std::max(1, static_cast<int>(std::ceil(nl.floorplan.height / side - 1e-12)));
  return g;
}

DensityGrid build_grid(const Netlist& nl, const Placement& placement,
                       const GridOptions& options) {
  if (placement.positions.size() != nl.cells.size())
    throw InputError("placement does not cover the netlist");
  GridParams g = make_grid_params(nl, options.bin_scale);

  std::vector<double> bin_area(g.num_bins());
  for (int by = 0; by < g.ny; ++by) {
    double hy = overlap_1d(g.origin_y + by * g.bin_h, g.origin_y + (by + 1) * g.bin_h,
                           nl.floorplan.y, nl.floorplan.y + nl.floorplan.height);
    for (int bx = 0; bx < g.nx; ++bx) {
      double hx = overlap_1d(g.origin_x + bx * g.bin_w, g.origin_x + (bx + 1) * g.bin_w,
                             nl.floorplan.x, nl.floorplan.x + nl.floorplan.width);
      bin_area[g.bin_index(bx, by)] = hx * hy;
    }
  }

  // Row-major over cells, one accumulator: bit-reproducible across runs.
  std::vector<double> occupied(g.num_bins(), 0.0);
  for (const Cell& c : nl.cells) {
    if (c.is_filler() && !options.include_fillers) continue;
    Rect r = clip(cell_rect(c, placement.positions[c.id]), nl.floorplan);
    for_each_overlap(g, r, [&](int b, double oa) { occupied[b] += oa; });
  }
  return DensityGrid(g, std::move(occupied), std::move(bin_area));
}

CellDensityVector cell_density(const DensityGrid& grid, const Netlist& nl,
                               const Placement& placement) {
  if (placement.positions.size() != nl.cells.size())
    throw InputError("placement does not cover the netlist");
  CellDensityVector out;
  out.grid = grid.params();
  out.values.assign(nl.cells.size(), 0.0);
  for (const Cell& c : nl.cells) {
    double a = c.area();
    if (a <= 0) throw NumericalError("cell with zero area reached cell_density: " + c.name);
    Rect r = clip(cell_rect(c, placement.positions[c.id]), nl.floorplan);
    double acc = 0;
    for_each_overlap(grid.params(), r,
                     [&](int b, double oa) { acc += grid.rho(b) * oa; });
    out.values[c.id] = acc / a;
  }
  return out;
}

ToolTargetResult tool_target(const Netlist& place, const Netlist& postroute,
                             const Placement& postroute_positions,
                             const SizeTable& postsynth_sizes, double bin_scale) {
  ToolTargetResult out;
  out.geometry = match_netlists(place, postroute, postroute_positions, postsynth_sizes);

  DensityGrid grid = build_grid(out.geometry.netlist, out.geometry.placement, {bin_scale, false});
  out.geometry_density = cell_density(grid, out.geometry.netlist, out.geometry.placement);

  out.targets.provenance = "tool";
  out.targets.values.assign(place.cells.size(),
                            std::numeric_limits<double>::quiet_NaN());
  double matched_sum = 0;
  std::size_t matched_count = 0;
  for (std::size_t gi = 0; gi < out.geometry.place_cell.size(); ++gi) {
    int pid = out.geometry.place_cell[gi];
    if (pid < 0) continue;
    double z = out.geometry_density.values[gi];
    out.targets.values[pid] = z;
    matched_sum += z;
    ++matched_count;
  }
  double fallback = matched_sum / static_cast<double>(matched_count);
  for (double& v : out.targets.values)
    if (std::isnan(v)) v = fallback;  // place-only cells: mean matched target
  return out;
}

void write_density_csv(const DensityGrid& grid, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path);
  const GridParams& g = grid.params();
  out.precision(17);
  for (int by = g.ny - 1; by >= 0; --by) {
    for (int bx = 0; bx < g.nx; ++bx) {
      if (bx) out << ',';
      out << grid.rho(bx, by);
    }
    out << '\n';
  }
}

void write_density_pgm(const DensityGrid& grid, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  const GridParams& g = grid.params();
  out << "P5\n" << g.nx << ' ' << g.ny << "\n255\n";
  for (int by = g.ny - 1; by >= 0; --by)
    for (int bx = 0; bx < g.nx; ++bx) {
      double v = std::clamp(grid.rho(bx, by), 0.0, 1.0);
      out.put(static_cast<char>(std::lround(v * 255.0)));
    }
}

}  // namespace goalplace
