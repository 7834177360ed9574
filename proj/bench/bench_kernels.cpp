// Compares the OpenMP move-evaluation and exhaustive-search kernels against
// their serial references: asserts identical results, reports timings.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "mass/assign.hpp"
#include "mass/craft.hpp"
#include "mass/loads.hpp"
#include "mass/oracle.hpp"
#include "mass/plan.hpp"

using namespace mass;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

LoadMatrix random_loads(std::mt19937& rng, int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("F" + std::to_string(i));
  std::vector<std::optional<std::int64_t>> cells(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || rng() % 100 < 60) continue;
      cells[static_cast<std::size_t>(i) * n + j] =
          static_cast<std::int64_t>(1 + rng() % 100) * kMicro;
    }
  return LoadMatrix::from_cells(names, cells);
}

}  // namespace

int main() {
  std::mt19937 rng(7);
  int mismatches = 0;

  // Move enumeration: 32 facilities on a 3x12 grid, ~10k candidates.
  {
    int n = 32;
    LoadMatrix lm = random_loads(rng, n);
    FloorPlan fp{264 * kMicro, 34 * kMicro, 20 * kMicro, 10 * kMicro, 2 * kMicro};
    GridShape grid = derive_grid(fp);
    Layout layout;
    for (int i = 0; i < n; ++i)
      layout.slot_of.push_back(Slot{i / grid.cols, i % grid.cols});

    MoveOptions par, ser;
    ser.parallel = false;

    double par_best = 0, ser_best = 0;
    std::size_t candidates = 0;
    for (int rep = 0; rep < 5; ++rep) {
      auto t0 = Clock::now();
      std::vector<Move> a = enumerate_moves(layout, lm, fp, par);
      double pa = ms_since(t0);

      t0 = Clock::now();
      std::vector<Move> b = enumerate_moves_serial(layout, lm, fp, ser);
      double se = ms_since(t0);

      if (a != b) ++mismatches;
      candidates = a.size();
      if (rep == 0 || pa < par_best) par_best = pa;
      if (rep == 0 || se < ser_best) ser_best = se;
    }
    std::printf("enumerate_moves     n=%-3d %6zu candidates  parallel %8.2f ms  serial %8.2f ms\n",
                n, candidates, par_best, ser_best);
  }

  // Exhaustive assignment search: 8! = 40320 permutations.
  {
    int n = 8;
    std::vector<std::int64_t> entries(static_cast<std::size_t>(n) * n);
    for (auto& e : entries) e = static_cast<std::int64_t>(rng() % 100) * kMicro;
    CostMatrix cm = CostMatrix::from_entries(n, entries);

    double par_best = 0, ser_best = 0;
    for (int rep = 0; rep < 5; ++rep) {
      auto t0 = Clock::now();
      AssignmentOracleResult a = brute_force_assignment(cm);
      double pa = ms_since(t0);

      t0 = Clock::now();
      AssignmentOracleResult b = brute_force_assignment_serial(cm);
      double se = ms_since(t0);

      if (a.best_cost_micro != b.best_cost_micro || !(a.witness == b.witness) ||
          a.optima_count != b.optima_count)
        ++mismatches;
      if (rep == 0 || pa < par_best) par_best = pa;
      if (rep == 0 || se < ser_best) ser_best = se;
    }
    std::printf("brute_force_assign  n=%-3d %6d permutations parallel %8.2f ms  serial %8.2f ms\n",
                n, 40320, par_best, ser_best);
  }

  // Exhaustive layout search: 6 facilities into 8 slots, 20160 placements.
  {
    LoadMatrix lm = random_loads(rng, 6);
    FloorPlan fp{86 * kMicro, 22 * kMicro, 20 * kMicro, 10 * kMicro, 2 * kMicro};

    double par_best = 0, ser_best = 0;
    for (int rep = 0; rep < 5; ++rep) {
      auto t0 = Clock::now();
      LayoutOracleResult a = brute_force_optimum(lm, fp);
      double pa = ms_since(t0);

      t0 = Clock::now();
      LayoutOracleResult b = brute_force_optimum_serial(lm, fp);
      double se = ms_since(t0);

      if (a.best_cost != b.best_cost || !(a.witness == b.witness) ||
          a.optima_count != b.optima_count)
        ++mismatches;
      if (rep == 0 || pa < par_best) par_best = pa;
      if (rep == 0 || se < ser_best) ser_best = se;
    }
    std::printf("brute_force_layout  n=%-3d %6d placements   parallel %8.2f ms  serial %8.2f ms\n",
                6, 20160, par_best, ser_best);
  }

  if (mismatches != 0) {
    std::printf("FAIL: %d result mismatches between parallel and serial kernels\n", mismatches);
    return 1;
  }
  std::printf("parallel and serial kernels agree on every run\n");
  return 0;
}
