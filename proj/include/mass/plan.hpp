#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mass/assign.hpp"
#include "mass/loads.hpp"

namespace mass {

// Grid dimensions and floor lengths are capped so slot indices and distances
// stay well inside int64 even for degenerate floor/facility ratios.
inline constexpr std::int64_t kMaxGridLines = 65536;
inline constexpr std::int64_t kMaxDimMicro = 10'000'000 * kMicro;  // 1e7 meters

// Rectangular shop floor holding a grid of equal facility footprints
// separated by aisles. All lengths in micro-meters.
struct FloorPlan {
  std::int64_t floor_w = 0;
  std::int64_t floor_h = 0;
  std::int64_t facility_w = 0;
  std::int64_t facility_h = 0;
  std::int64_t aisle = 0;

  // Column pitch: distance between the centers of adjacent columns.
  std::int64_t pitch() const { return facility_w + aisle; }
};

struct GridShape {
  int rows = 0;
  int cols = 0;
  long slots() const { return static_cast<long>(rows) * cols; }
};

struct Slot {
  int row = 0;
  int col = 0;
  bool operator==(const Slot&) const = default;
};

// Injective facility -> slot placement.
struct Layout {
  std::vector<Slot> slot_of;

  int n() const { return static_cast<int>(slot_of.size()); }
  bool operator==(const Layout&) const = default;
};

struct Contribution {
  int from = 0;
  int to = 0;
  std::int64_t load_micro = 0;
  std::int64_t dist_um = 0;
  CostValue product = 0;  // micro^2 scale
};

// Load-distance objective decomposition: total = sum of products over every
// present off-diagonal load, in row-major cell order.
struct CostReport {
  CostValue total = 0;
  std::vector<Contribution> contributions;
};

// Aisles run between neighbors only, none along the walls:
//   cols = floor((floor_w + aisle) / (facility_w + aisle)), rows likewise.
GridShape derive_grid(const FloorPlan& fp);

// Seeds a block layout from an assignment. The permutation is decomposed
// into cycles; groups are placed left-to-right in ascending order of each
// group's minimum facility index, filling columns top to bottom. A 2-cycle
// always occupies two vertically adjacent slots of one column (lower
// facility index above), skipping to a fresh column when fewer than two
// slots remain in the current one; longer cycles and fixed points flow down
// the current column and continue atop the next.
Layout build_initial_layout(const Assignment& asg, const FloorPlan& fp, int n);

// Access-point metric: 0 for i == j, the aisle width within a column, and
// pitch * |column difference| across columns. Row separation contributes
// nothing across columns.
std::int64_t distance_um(const Layout& layout, const FloorPlan& fp, int i, int j);

// L = sum over present cells of load(i,j) * distance(i,j).
CostReport layout_cost(const Layout& layout, const LoadMatrix& lm, const FloorPlan& fp);

// Fixed-width text grid, one cell per slot labeled with the facility name,
// `.` for unoccupied slots, columns separated by `|`. Byte-deterministic.
std::string render_ascii(const Layout& layout, const FloorPlan& fp,
                         std::span<const std::string> names);

}  // namespace mass
