#include "mass/assign.hpp"

#include <algorithm>
#include <numeric>

#include "mass/errors.hpp"

namespace mass {

namespace {

std::vector<std::vector<int>> zero_columns_by_row(const CostMatrix& cm) {
  std::vector<std::vector<int>> zeros(cm.n);
  for (int i = 0; i < cm.n; ++i)
    for (int j = 0; j < cm.n; ++j)
      if (cm.entry(i, j) == 0) zeros[i].push_back(j);
  return zeros;
}

bool try_augment(const std::vector<std::vector<int>>& zeros, int row,
                 std::vector<char>& visited, std::vector<int>& col_match) {
  for (int col : zeros[row]) {
    if (visited[col]) continue;
    visited[col] = 1;
    if (col_match[col] < 0 || try_augment(zeros, col_match[col], visited, col_match)) {
      col_match[col] = row;
      return true;
    }
  }
  return false;
}

// Maximum matching on zero cells; rows augmented in ascending index order,
// columns tried in ascending index order.
std::vector<int> kuhn_matching(const CostMatrix& cm) {
  auto zeros = zero_columns_by_row(cm);
  std::vector<int> col_match(cm.n, -1);
  for (int row = 0; row < cm.n; ++row) {
    std::vector<char> visited(cm.n, 0);
    try_augment(zeros, row, visited, col_match);
  }
  std::vector<int> row_match(cm.n, -1);
  for (int col = 0; col < cm.n; ++col)
    if (col_match[col] >= 0) row_match[col_match[col]] = col;
  return row_match;
}

void check_nonnegative(const CostMatrix& cm) {
  for (std::int64_t v : cm.entries)
    if (v < 0) fail(Errc::NegativeEntry, "cost matrix has a negative entry");
}

// Fewest-zeros-first extraction; returns nullopt when the greedy choice
// dead-ends even though a perfect zero matching exists.
std::optional<Assignment> greedy_zero_assignment(const CostMatrix& cm) {
  const int n = cm.n;
  std::vector<int> partner(n, -1);
  std::vector<char> col_taken(n, 0);

  for (int step = 0; step < n; ++step) {
    int best_row = -1;
    int best_count = n + 1;
    for (int i = 0; i < n; ++i) {
      if (partner[i] >= 0) continue;
      int count = 0;
      for (int j = 0; j < n; ++j)
        if (!col_taken[j] && cm.entry(i, j) == 0) ++count;
      if (count < best_count) {
        best_count = count;
        best_row = i;
      }
    }
    if (best_count == 0) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      if (!col_taken[j] && cm.entry(best_row, j) == 0) {
        partner[best_row] = j;
        col_taken[j] = 1;
        break;
      }
    }
  }
  return Assignment{std::move(partner)};
}

}  // namespace

CostMatrix CostMatrix::from_entries(int n, std::vector<std::int64_t> entries) {
  if (n < 1) fail(Errc::InvalidArgument, "cost matrix needs n >= 1");
  if (entries.size() != static_cast<std::size_t>(n) * n)
    fail(Errc::NonSquare, "expected " + std::to_string(n) + "x" + std::to_string(n) + " entries");
  for (std::int64_t v : entries)
    if (v < 0) fail(Errc::NegativeEntry, "cost entries must be nonnegative");
  CostMatrix cm;
  cm.n = n;
  cm.entries = std::move(entries);
  cm.synthetic.assign(static_cast<std::size_t>(n) * n, 0);
  cm.big_m = 0;
  return cm;
}

bool Assignment::is_permutation() const {
  std::vector<char> seen(partner.size(), 0);
  for (int j : partner) {
    if (j < 0 || j >= n() || seen[j]) return false;
    seen[j] = 1;
  }
  return true;
}

CostMatrix to_cost_matrix(const LoadMatrix& lm, std::optional<std::int64_t> big_m_micro) {
  const int n = lm.n();
  const std::int64_t sum = lm.total_load_micro();
  std::int64_t big_m = big_m_micro.value_or(kMicro + sum);
  if (big_m <= sum)
    fail(Errc::InvalidArgument, "big-M must exceed the sum of all present loads");

  CostMatrix cm;
  cm.n = n;
  cm.big_m = big_m;
  cm.entries.resize(static_cast<std::size_t>(n) * n);
  cm.synthetic.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool vac = lm.vacant(i, j);
      cm.entry(i, j) = vac ? big_m : lm.load_micro(i, j);
      cm.synthetic[static_cast<std::size_t>(i) * n + j] = vac ? 1 : 0;
    }
  }
  return cm;
}

CostMatrix reduce(CostMatrix cm) {
  check_nonnegative(cm);
  const int n = cm.n;
  for (int i = 0; i < n; ++i) {
    std::int64_t min = cm.entry(i, 0);
    for (int j = 1; j < n; ++j) min = std::min(min, cm.entry(i, j));
    for (int j = 0; j < n; ++j) cm.entry(i, j) -= min;
  }
  for (int j = 0; j < n; ++j) {
    std::int64_t min = cm.entry(0, j);
    for (int i = 1; i < n; ++i) min = std::min(min, cm.entry(i, j));
    for (int i = 0; i < n; ++i) cm.entry(i, j) -= min;
  }
  return cm;
}

std::vector<int> max_zero_matching(const CostMatrix& cm) {
  return kuhn_matching(cm);
}

LineCover min_line_cover(const CostMatrix& cm) {
  const int n = cm.n;
  auto zeros = zero_columns_by_row(cm);
  auto row_match = kuhn_matching(cm);

  // Konig: alternating reachability from unmatched rows (non-matching zero
  // edge row -> col, matching edge col -> row).
  std::vector<char> row_reached(n, 0), col_reached(n, 0);
  std::vector<int> col_match(n, -1);
  for (int i = 0; i < n; ++i)
    if (row_match[i] >= 0) col_match[row_match[i]] = i;

  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    if (row_match[i] < 0) {
      row_reached[i] = 1;
      stack.push_back(i);
    }
  }
  while (!stack.empty()) {
    int row = stack.back();
    stack.pop_back();
    for (int col : zeros[row]) {
      if (col_reached[col]) continue;
      col_reached[col] = 1;
      int next = col_match[col];
      if (next >= 0 && !row_reached[next]) {
        row_reached[next] = 1;
        stack.push_back(next);
      }
    }
  }

  LineCover cover;
  for (int i = 0; i < n; ++i)
    if (!row_reached[i]) cover.rows.push_back(i);
  for (int j = 0; j < n; ++j)
    if (col_reached[j]) cover.cols.push_back(j);
  return cover;
}

CostMatrix adjust(CostMatrix cm, const LineCover& cover) {
  const int n = cm.n;
  std::vector<char> row_cov(n, 0), col_cov(n, 0);
  for (int i : cover.rows) {
    if (i < 0 || i >= n) fail(Errc::InvalidArgument, "cover row out of range");
    row_cov[i] = 1;
  }
  for (int j : cover.cols) {
    if (j < 0 || j >= n) fail(Errc::InvalidArgument, "cover column out of range");
    col_cov[j] = 1;
  }

  std::int64_t min_uncovered = -1;
  for (int i = 0; i < n; ++i) {
    if (row_cov[i]) continue;
    for (int j = 0; j < n; ++j) {
      if (col_cov[j]) continue;
      if (min_uncovered < 0 || cm.entry(i, j) < min_uncovered) min_uncovered = cm.entry(i, j);
    }
  }
  if (min_uncovered < 0)
    fail(Errc::NoUncoveredCell, "every cell is covered; adjustment is not applicable");
  if (min_uncovered == 0)
    fail(Errc::InvalidArgument, "cover leaves a zero uncovered");

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!row_cov[i] && !col_cov[j])
        cm.entry(i, j) -= min_uncovered;
      else if (row_cov[i] && col_cov[j])
        cm.entry(i, j) += min_uncovered;
    }
  }
  return cm;
}

Assignment hungarian_solve(const CostMatrix& cm) {
  check_nonnegative(cm);
  CostMatrix work = reduce(cm);
  const long guard = 10L * cm.n * cm.n;

  for (long round = 0; round <= guard; ++round) {
    LineCover cover = min_line_cover(work);
    if (cover.k() >= cm.n) {
      if (auto asg = greedy_zero_assignment(work)) return *asg;
      // Greedy dead-ended; the Kuhn matching is perfect here (k == n).
      auto row_match = max_zero_matching(work);
      for (int j : row_match)
        if (j < 0) fail(Errc::IterationGuardExceeded, "matching extraction failed");
      return Assignment{std::move(row_match)};
    }
    work = adjust(std::move(work), cover);
  }
  fail(Errc::IterationGuardExceeded,
       "no optimal assignment within " + std::to_string(guard) + " adjustment rounds");
}

CostMatrix shift_costs(CostMatrix cm, const ShiftVectors& sv) {
  const int n = cm.n;
  if (sv.row_shift.size() != static_cast<std::size_t>(n) ||
      sv.col_shift.size() != static_cast<std::size_t>(n))
    fail(Errc::SizeMismatch, "shift vectors must have length n");

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      __int128 shifted = static_cast<__int128>(cm.entry(i, j)) + sv.row_shift[i] + sv.col_shift[j];
      if (shifted < 0)
        fail(Errc::NegativeEntry, "shift makes entry (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") negative");
      if (shifted > INT64_MAX) fail(Errc::TooLarge, "shifted entry overflows");
      cm.entry(i, j) = static_cast<std::int64_t>(shifted);
    }
  }
  return cm;
}

AssignmentCost assignment_cost(const CostMatrix& cm, const Assignment& asg) {
  if (asg.n() != cm.n)
    fail(Errc::SizeMismatch, "assignment has " + std::to_string(asg.n()) +
                                 " entries for a " + std::to_string(cm.n) + "-row matrix");
  if (!asg.is_permutation())
    fail(Errc::SizeMismatch, "assignment is not a bijection");

  AssignmentCost result;
  __int128 total = 0;
  for (int i = 0; i < cm.n; ++i) {
    total += cm.entry(i, asg.partner[i]);
    result.uses_synthetic |= cm.is_synthetic(i, asg.partner[i]);
  }
  if (total > INT64_MAX) fail(Errc::TooLarge, "assignment cost overflows");
  result.total_micro = static_cast<std::int64_t>(total);
  return result;
}

}  // namespace mass
