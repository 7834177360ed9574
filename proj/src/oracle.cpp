#include "mass/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

#include "mass/errors.hpp"

namespace mass {

namespace {

void check_oracle_n(int n) {
  if (n < 1) fail(Errc::InvalidArgument, "oracle needs at least one facility");
  if (n > kOracleMaxN)
    fail(Errc::TooLarge, "exhaustive enumeration is capped at " + std::to_string(kOracleMaxN) +
                             " facilities");
}

// Best permutation with partner[0] fixed; rest of the rows take `rest` in
// every order. Enumeration is lexicographic, so the kept witness is the
// lexicographically smallest optimum of the slice.
struct AssignmentSlice {
  bool have = false;
  __int128 best = 0;
  std::vector<int> witness;
  long count = 0;

  void offer(__int128 cost, const std::vector<int>& partner) {
    if (!have || cost < best) {
      have = true;
      best = cost;
      witness = partner;
      count = 1;
    } else if (cost == best) {
      ++count;
    }
  }
};

AssignmentSlice assignment_slice(const CostMatrix& cm, int first_col) {
  const int n = cm.n;
  std::vector<int> rest;
  for (int c = 0; c < n; ++c)
    if (c != first_col) rest.push_back(c);
  std::vector<int> partner(static_cast<std::size_t>(n));
  partner[0] = first_col;
  AssignmentSlice slice;
  do {
    for (int i = 1; i < n; ++i) partner[static_cast<std::size_t>(i)] = rest[static_cast<std::size_t>(i - 1)];
    __int128 cost = 0;
    for (int i = 0; i < n; ++i) cost += cm.entry(i, partner[static_cast<std::size_t>(i)]);
    slice.offer(cost, partner);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return slice;
}

AssignmentOracleResult finish_assignment(const AssignmentSlice& total) {
  if (total.best > std::numeric_limits<std::int64_t>::max())
    fail(Errc::TooLarge, "optimal assignment cost exceeds the representable range");
  AssignmentOracleResult result;
  result.best_cost_micro = static_cast<std::int64_t>(total.best);
  result.witness = Assignment{total.witness};
  result.optima_count = total.count;
  return result;
}

// Exhaustive placement search. The distance arithmetic is written out from
// the floor-plan fields on purpose: the oracle double-checks plan/craft, so
// it must not lean on their metric helpers.
struct LayoutSearch {
  int n = 0;
  int slots = 0;
  int cols = 0;
  std::int64_t aisle = 0;
  std::int64_t pitch = 0;
  std::vector<std::tuple<int, int, std::int64_t>> flows;  // (from, to, load)

  std::vector<int> slot_of;  // per facility, row-major slot index
  std::vector<char> used;
  AssignmentSlice acc;  // same offer/merge shape; __int128 covers CostValue

  void dfs(int facility) {
    if (facility == n) {
      evaluate();
      return;
    }
    for (int s = 0; s < slots; ++s) {
      if (used[static_cast<std::size_t>(s)]) continue;
      used[static_cast<std::size_t>(s)] = 1;
      slot_of[static_cast<std::size_t>(facility)] = s;
      dfs(facility + 1);
      used[static_cast<std::size_t>(s)] = 0;
    }
  }

  void evaluate() {
    __int128 cost = 0;
    for (const auto& [from, to, load] : flows) {
      const int ci = slot_of[static_cast<std::size_t>(from)] % cols;
      const int cj = slot_of[static_cast<std::size_t>(to)] % cols;
      const int dc = ci < cj ? cj - ci : ci - cj;
      const std::int64_t dist = dc == 0 ? aisle : pitch * dc;
      cost += static_cast<__int128>(load) * dist;
    }
    acc.offer(cost, slot_of);
  }
};

LayoutSearch make_layout_search(const LoadMatrix& lm, const FloorPlan& fp) {
  check_oracle_n(lm.n());
  const GridShape grid = derive_grid(fp);
  if (grid.slots() > kOracleMaxN)
    fail(Errc::TooLarge, "exhaustive enumeration is capped at " + std::to_string(kOracleMaxN) +
                             " slots");
  if (grid.slots() < lm.n()) fail(Errc::Infeasible, "grid has fewer slots than facilities");

  LayoutSearch search;
  search.n = lm.n();
  search.slots = static_cast<int>(grid.slots());
  search.cols = grid.cols;
  search.aisle = fp.aisle;
  search.pitch = fp.facility_w + fp.aisle;
  for (int i = 0; i < lm.n(); ++i)
    for (int j = 0; j < lm.n(); ++j)
      if (i != j && !lm.vacant(i, j)) search.flows.emplace_back(i, j, lm.load_micro(i, j));
  search.slot_of.assign(static_cast<std::size_t>(search.n), 0);
  search.used.assign(static_cast<std::size_t>(search.slots), 0);
  return search;
}

LayoutOracleResult finish_layout(const AssignmentSlice& total, int cols) {
  LayoutOracleResult result;
  result.best_cost = static_cast<CostValue>(total.best);
  result.witness.slot_of.reserve(total.witness.size());
  for (int s : total.witness) result.witness.slot_of.push_back(Slot{s / cols, s % cols});
  result.optima_count = total.count;
  return result;
}

// Deterministic reduction: slices are merged in slice order, so ties keep the
// witness from the earlier slice, which is the lexicographically smaller one.
void merge_slices(AssignmentSlice& total, const AssignmentSlice& slice) {
  if (!slice.have) return;
  if (!total.have || slice.best < total.best) {
    total = slice;
  } else if (slice.best == total.best) {
    total.count += slice.count;
  }
}

}  // namespace

AssignmentOracleResult brute_force_assignment(const CostMatrix& cm) {
  check_oracle_n(cm.n);
  const int n = cm.n;
  std::vector<AssignmentSlice> slices(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (int j = 0; j < n; ++j) slices[static_cast<std::size_t>(j)] = assignment_slice(cm, j);
  AssignmentSlice total;
  for (const AssignmentSlice& slice : slices) merge_slices(total, slice);
  return finish_assignment(total);
}

AssignmentOracleResult brute_force_assignment_serial(const CostMatrix& cm) {
  check_oracle_n(cm.n);
  const int n = cm.n;
  std::vector<int> partner(static_cast<std::size_t>(n));
  std::iota(partner.begin(), partner.end(), 0);
  AssignmentSlice total;
  do {
    __int128 cost = 0;
    for (int i = 0; i < n; ++i) cost += cm.entry(i, partner[static_cast<std::size_t>(i)]);
    total.offer(cost, partner);
  } while (std::next_permutation(partner.begin(), partner.end()));
  return finish_assignment(total);
}

std::vector<Assignment> all_optimal_assignments(const CostMatrix& cm) {
  check_oracle_n(cm.n);
  const int n = cm.n;
  std::vector<int> partner(static_cast<std::size_t>(n));
  std::iota(partner.begin(), partner.end(), 0);
  bool have = false;
  __int128 best = 0;
  std::vector<Assignment> out;
  do {
    __int128 cost = 0;
    for (int i = 0; i < n; ++i) cost += cm.entry(i, partner[static_cast<std::size_t>(i)]);
    if (!have || cost < best) {
      have = true;
      best = cost;
      out.clear();
    }
    if (cost == best) out.push_back(Assignment{partner});
  } while (std::next_permutation(partner.begin(), partner.end()));
  return out;
}

LayoutOracleResult brute_force_optimum(const LoadMatrix& lm, const FloorPlan& fp) {
  LayoutSearch base = make_layout_search(lm, fp);
  const int slots = base.slots;
  std::vector<AssignmentSlice> slices(static_cast<std::size_t>(slots));
#pragma omp parallel for schedule(dynamic)
  for (int s0 = 0; s0 < slots; ++s0) {
    LayoutSearch search = base;
    search.used[static_cast<std::size_t>(s0)] = 1;
    search.slot_of[0] = s0;
    search.dfs(1);
    slices[static_cast<std::size_t>(s0)] = search.acc;
  }
  AssignmentSlice total;
  for (const AssignmentSlice& slice : slices) merge_slices(total, slice);
  return finish_layout(total, base.cols);
}

LayoutOracleResult brute_force_optimum_serial(const LoadMatrix& lm, const FloorPlan& fp) {
  LayoutSearch search = make_layout_search(lm, fp);
  search.dfs(0);
  return finish_layout(search.acc, search.cols);
}

}  // namespace mass
