#include "mass/plan.hpp"

#include <algorithm>
#include <cstdlib>

#include "mass/errors.hpp"

namespace mass {

namespace {

void check_floor_plan(const FloorPlan& fp) {
  if (fp.floor_w <= 0 || fp.floor_h <= 0 || fp.facility_w <= 0 || fp.facility_h <= 0)
    fail(Errc::InvalidArgument, "floor and facility dimensions must be positive");
  if (fp.aisle < 0) fail(Errc::InvalidArgument, "aisle width must be nonnegative");
  if (fp.floor_w > kMaxDimMicro || fp.floor_h > kMaxDimMicro || fp.aisle > kMaxDimMicro)
    fail(Errc::TooLarge, "floor dimensions exceed the supported range");
}

void check_placed(const Layout& layout, int facility) {
  if (facility < 0 || facility >= layout.n())
    fail(Errc::Unplaced, "facility " + std::to_string(facility) + " is not placed");
}

}  // namespace

GridShape derive_grid(const FloorPlan& fp) {
  check_floor_plan(fp);
  // Aisles separate neighbors only, so a strip of c columns needs
  // c*facility_w + (c-1)*aisle <= floor_w.
  std::int64_t cols = (fp.floor_w + fp.aisle) / (fp.facility_w + fp.aisle);
  std::int64_t rows = (fp.floor_h + fp.aisle) / (fp.facility_h + fp.aisle);
  if (rows == 0 || cols == 0) fail(Errc::NoCapacity, "no facility footprint fits the floor");
  if (rows > kMaxGridLines || cols > kMaxGridLines)
    fail(Errc::TooLarge, "derived grid exceeds the supported size");
  return GridShape{static_cast<int>(rows), static_cast<int>(cols)};
}

Layout build_initial_layout(const Assignment& asg, const FloorPlan& fp, int n) {
  if (asg.n() != n) fail(Errc::SizeMismatch, "assignment size does not match facility count");
  if (!asg.is_permutation()) fail(Errc::InvalidArgument, "assignment is not a permutation");

  const GridShape grid = derive_grid(fp);
  if (grid.slots() < n) fail(Errc::Infeasible, "grid has fewer slots than facilities");

  // Cycles of the partner permutation, scanned from ascending start indices:
  // group order is ascending in each group's minimum member.
  std::vector<std::vector<int>> groups;
  std::vector<char> visited(n, 0);
  for (int start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<int> cycle;
    int cur = start;
    do {
      visited[cur] = 1;
      cycle.push_back(cur);
      cur = asg.partner[cur];
    } while (cur != start);
    groups.push_back(std::move(cycle));
  }

  Layout layout;
  layout.slot_of.assign(n, Slot{});
  int row = 0, col = 0;
  auto place = [&](int facility) {
    if (col >= grid.cols) fail(Errc::Infeasible, "ran out of columns while placing facilities");
    layout.slot_of[facility] = Slot{row, col};
    if (++row == grid.rows) {
      row = 0;
      ++col;
    }
  };

  for (const auto& group : groups) {
    if (group.size() == 2) {
      if (grid.rows < 2)
        fail(Errc::Infeasible, "a 2-cycle needs at least two rows for a vertical pair");
      if (grid.rows - row < 2) {  // pair must not straddle columns
        row = 0;
        ++col;
      }
      place(std::min(group[0], group[1]));
      place(std::max(group[0], group[1]));
    } else {
      for (int facility : group) place(facility);
    }
  }
  return layout;
}

std::int64_t distance_um(const Layout& layout, const FloorPlan& fp, int i, int j) {
  check_floor_plan(fp);
  check_placed(layout, i);
  check_placed(layout, j);
  if (i == j) return 0;
  const int dc = std::abs(layout.slot_of[i].col - layout.slot_of[j].col);
  if (dc == 0) return fp.aisle;  // facing across the aisle within one column
  return fp.pitch() * dc;        // travel along the aisle between column centers
}

CostReport layout_cost(const Layout& layout, const LoadMatrix& lm, const FloorPlan& fp) {
  if (layout.n() != lm.n())
    fail(Errc::Unplaced, "layout places " + std::to_string(layout.n()) + " of " +
                             std::to_string(lm.n()) + " facilities");
  const GridShape grid = derive_grid(fp);
  for (int i = 0; i < layout.n(); ++i) {
    const Slot s = layout.slot_of[i];
    if (s.row < 0 || s.row >= grid.rows || s.col < 0 || s.col >= grid.cols)
      fail(Errc::Unplaced, "facility " + lm.names()[i] + " lies outside the grid");
    for (int j = i + 1; j < layout.n(); ++j)
      if (layout.slot_of[j] == s)
        fail(Errc::InvalidArgument, "facilities " + lm.names()[i] + " and " + lm.names()[j] +
                                        " share a slot");
  }

  CostReport report;
  for (int i = 0; i < lm.n(); ++i) {
    for (int j = 0; j < lm.n(); ++j) {
      if (i == j || lm.vacant(i, j)) continue;
      const std::int64_t load = lm.load_micro(i, j);
      const std::int64_t dist = distance_um(layout, fp, i, j);
      const CostValue product = static_cast<CostValue>(load) * dist;
      report.contributions.push_back(Contribution{i, j, load, dist, product});
      report.total += product;
    }
  }
  return report;
}

std::string render_ascii(const Layout& layout, const FloorPlan& fp,
                         std::span<const std::string> names) {
  const GridShape grid = derive_grid(fp);
  if (names.size() != static_cast<std::size_t>(layout.n()))
    fail(Errc::SizeMismatch, "one name per placed facility required");

  std::vector<std::vector<std::string>> cells(
      grid.rows, std::vector<std::string>(grid.cols, "."));
  for (int i = 0; i < layout.n(); ++i) {
    const Slot s = layout.slot_of[i];
    if (s.row < 0 || s.row >= grid.rows || s.col < 0 || s.col >= grid.cols)
      fail(Errc::Unplaced, "facility " + names[i] + " lies outside the grid");
    cells[s.row][s.col] = names[i];
  }

  std::vector<std::size_t> width(grid.cols, 1);
  for (int r = 0; r < grid.rows; ++r)
    for (int c = 0; c < grid.cols; ++c) width[c] = std::max(width[c], cells[r][c].size());

  std::string out;
  for (int r = 0; r < grid.rows; ++r) {
    std::string line;
    for (int c = 0; c < grid.cols; ++c) {
      if (c > 0) line += '|';
      line += cells[r][c];
      line.append(width[c] - cells[r][c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace mass
