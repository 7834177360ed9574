#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "mass/craft.hpp"
#include "mass/oracle.hpp"
#include "test_util.hpp"

using namespace mass;
using namespace testutil;

namespace {

// 2x4 grid: room to leave a column empty and to shuffle placements.
FloorPlan wide_floor() {
  FloorPlan fp = example_floor();
  fp.floor_w = U(86);  // (86+2)/(20+2) = 4 columns
  return fp;
}

Layout random_layout(std::mt19937& rng, int n, const GridShape& grid) {
  std::vector<int> slots(static_cast<std::size_t>(grid.slots()));
  std::iota(slots.begin(), slots.end(), 0);
  std::shuffle(slots.begin(), slots.end(), rng);
  Layout layout;
  for (int i = 0; i < n; ++i)
    layout.slot_of.push_back(Slot{slots[i] / grid.cols, slots[i] % grid.cols});
  return layout;
}

MoveOptions only(MoveKind kind) {
  MoveOptions opts;
  opts.facility2 = kind == MoveKind::Facility2Swap;
  opts.facility3 = kind == MoveKind::Facility3Rotation;
  opts.column2 = kind == MoveKind::Column2Swap;
  opts.column3 = kind == MoveKind::Column3Rotation;
  return opts;
}

}  // namespace

TEST_CASE("move kind names") {
  CHECK(std::string(move_kind_name(MoveKind::Facility2Swap)) == "facility-2-swap");
  CHECK(std::string(move_kind_name(MoveKind::Facility3Rotation)) == "facility-3-rotation");
  CHECK(std::string(move_kind_name(MoveKind::Column2Swap)) == "column-2-swap");
  CHECK(std::string(move_kind_name(MoveKind::Column3Rotation)) == "column-3-rotation");
}

TEST_CASE("candidate enumeration counts and order") {
  Layout layout = example_initial_layout();
  LoadMatrix lm = example_loads();
  FloorPlan fp = example_floor();

  std::vector<Move> swaps = enumerate_moves(layout, lm, fp, only(MoveKind::Facility2Swap));
  REQUIRE(swaps.size() == 15);  // C(6,2)
  CHECK(swaps.front().participants == std::vector<int>{0, 1});
  CHECK(swaps.back().participants == std::vector<int>{4, 5});

  MoveOptions all;
  std::vector<Move> moves = enumerate_moves(layout, lm, fp, all);
  REQUIRE(moves.size() == 60);  // 15 + 40 + 3 + 2

  // Kind blocks in declaration order, lexicographic participants inside.
  CHECK(moves[0].kind == MoveKind::Facility2Swap);
  CHECK(moves[0].participants == std::vector<int>{0, 1});
  CHECK(moves[15].kind == MoveKind::Facility3Rotation);
  CHECK(moves[15].participants == std::vector<int>{0, 1, 2});
  CHECK(moves[16].participants == std::vector<int>{0, 1, 3});
  CHECK(moves[19].participants == std::vector<int>{0, 2, 1});
  CHECK(moves[54].participants == std::vector<int>{3, 5, 4});
  CHECK(moves[55].kind == MoveKind::Column2Swap);
  CHECK(moves[55].participants == std::vector<int>{0, 1});
  CHECK(moves[56].participants == std::vector<int>{0, 2});
  CHECK(moves[57].participants == std::vector<int>{1, 2});
  CHECK(moves[58].kind == MoveKind::Column3Rotation);
  CHECK(moves[58].participants == std::vector<int>{0, 1, 2});
  CHECK(moves[59].participants == std::vector<int>{0, 2, 1});

  for (std::size_t i = 0; i < moves.size(); ++i) {
    std::vector<int> p = moves[i].participants;
    std::sort(p.begin(), p.end());
    CHECK(std::adjacent_find(p.begin(), p.end()) == p.end());
  }
}

TEST_CASE("column moves range over occupied columns only") {
  LoadMatrix lm = example_loads();
  FloorPlan fp = wide_floor();
  REQUIRE(derive_grid(fp).cols == 4);

  // Six facilities fill columns 0..2; column 3 stays empty.
  Layout layout = example_initial_layout();
  std::vector<Move> moves = enumerate_moves(layout, lm, fp, only(MoveKind::Column2Swap));
  CHECK(moves.size() == 3);
  for (const Move& m : moves)
    for (int c : m.participants) CHECK(c <= 2);
}

TEST_CASE("deltas on the worked example") {
  Layout layout = example_initial_layout();
  LoadMatrix lm = example_loads();
  FloorPlan fp = example_floor();

  // No facility-level 2-swap improves the initial arrangement.
  for (const Move& m : enumerate_moves(layout, lm, fp, only(MoveKind::Facility2Swap)))
    CHECK(m.delta >= 0);

  std::vector<Move> col2 = enumerate_moves(layout, lm, fp, only(MoveKind::Column2Swap));
  REQUIRE(col2.size() == 3);
  CHECK(col2[2].participants == std::vector<int>{1, 2});
  CHECK(col2[2].delta == -CU(220));

  std::vector<Move> col3 = enumerate_moves(layout, lm, fp, only(MoveKind::Column3Rotation));
  REQUIRE(col3.size() == 2);
  CHECK(col3[1].participants == std::vector<int>{0, 2, 1});
  CHECK(col3[1].delta == -CU(220));
}

TEST_CASE("every delta matches a from-scratch recomputation") {
  LoadMatrix lm = example_loads();
  std::mt19937 rng(60486);

  for (int iter = 0; iter < 10; ++iter) {
    FloorPlan fp = iter == 0 ? example_floor() : wide_floor();
    Layout layout = iter == 0 ? example_initial_layout()
                              : random_layout(rng, 6, derive_grid(fp));
    CostValue base = layout_cost(layout, lm, fp).total;
    for (const Move& m : enumerate_moves(layout, lm, fp, MoveOptions{})) {
      CAPTURE(iter);
      CAPTURE(m.participants);
      CHECK(layout_cost(apply_move(layout, m), lm, fp).total - base == m.delta);
    }
  }
}

TEST_CASE("serial and parallel enumeration agree exactly") {
  LoadMatrix lm = example_loads();
  FloorPlan fp = wide_floor();
  std::mt19937 rng(1211);
  for (int iter = 0; iter < 10; ++iter) {
    Layout layout = random_layout(rng, 6, derive_grid(fp));
    CHECK(enumerate_moves(layout, lm, fp, MoveOptions{}) ==
          enumerate_moves_serial(layout, lm, fp, MoveOptions{}));
  }
}

TEST_CASE("applying moves") {
  Layout layout = example_initial_layout();

  SUBCASE("2-swaps are involutions") {
    Move swap{MoveKind::Facility2Swap, {1, 4}, 0};
    CHECK(apply_move(apply_move(layout, swap), swap) == layout);

    Move cols{MoveKind::Column2Swap, {0, 2}, 0};
    CHECK(apply_move(apply_move(layout, cols), cols) == layout);
  }

  SUBCASE("3-rotations have order three") {
    Move rot{MoveKind::Facility3Rotation, {0, 2, 4}, 0};
    Layout once = apply_move(layout, rot);
    CHECK(once != layout);
    CHECK(apply_move(apply_move(once, rot), rot) == layout);

    Move cols{MoveKind::Column3Rotation, {0, 1, 2}, 0};
    Layout c1 = apply_move(layout, cols);
    CHECK(apply_move(apply_move(c1, cols), cols) == layout);
  }

  SUBCASE("facility 2-swap exchanges exactly the two slots") {
    Move swap{MoveKind::Facility2Swap, {0, 3}, 0};
    Layout after = apply_move(layout, swap);
    CHECK(after.slot_of[0] == layout.slot_of[3]);
    CHECK(after.slot_of[3] == layout.slot_of[0]);
    for (int i : {1, 2, 4, 5}) CHECK(after.slot_of[i] == layout.slot_of[i]);
  }

  SUBCASE("column swap carries whole columns") {
    Move swap{MoveKind::Column2Swap, {1, 2}, 0};
    Layout after = apply_move(layout, swap);
    CHECK(after.slot_of[0] == Slot{0, 0});
    CHECK(after.slot_of[1] == Slot{1, 0});
    CHECK(after.slot_of[2] == Slot{0, 2});
    CHECK(after.slot_of[3] == Slot{1, 2});
    CHECK(after.slot_of[4] == Slot{0, 1});
    CHECK(after.slot_of[5] == Slot{1, 1});
    CHECK(layout_cost(after, example_loads(), example_floor()).total == CU(2360));
  }

  SUBCASE("rotation sends each participant to the next one's place") {
    Move rot{MoveKind::Facility3Rotation, {0, 2, 4}, 0};
    Layout after = apply_move(layout, rot);
    CHECK(after.slot_of[0] == layout.slot_of[2]);
    CHECK(after.slot_of[2] == layout.slot_of[4]);
    CHECK(after.slot_of[4] == layout.slot_of[0]);
  }
}

TEST_CASE("apply_move validation") {
  Layout layout = example_initial_layout();

  CHECK(errc_of([&] {
          apply_move(layout, Move{MoveKind::Facility2Swap, {0}, 0});
        }) == Errc::InvalidArgument);
  CHECK(errc_of([&] {
          apply_move(layout, Move{MoveKind::Facility3Rotation, {0, 1}, 0});
        }) == Errc::InvalidArgument);
  CHECK(errc_of([&] {
          apply_move(layout, Move{MoveKind::Facility2Swap, {2, 2}, 0});
        }) == Errc::InvalidArgument);
  CHECK(errc_of([&] {
          apply_move(layout, Move{MoveKind::Facility2Swap, {0, 6}, 0});
        }) == Errc::Unplaced);
  CHECK(errc_of([&] {
          apply_move(layout, Move{MoveKind::Column2Swap, {0, 3}, 0});
        }) == Errc::Unplaced);
}

TEST_CASE("descent on the worked example takes exactly one move") {
  LoadMatrix lm = example_loads();
  FloorPlan fp = example_floor();
  auto [improved, trace] = craft_improve(example_initial_layout(), lm, fp, MoveOptions{});

  CHECK(trace.initial_cost == CU(2580));
  REQUIRE(trace.accepted.size() == 1);
  CHECK(trace.accepted[0].move.kind == MoveKind::Column2Swap);
  CHECK(trace.accepted[0].move.participants == std::vector<int>{1, 2});
  CHECK(trace.accepted[0].move.delta == -CU(220));
  CHECK(trace.accepted[0].cost_after == CU(2360));
  CHECK(trace.final_cost == CU(2360));
  CHECK_FALSE(trace.hit_max_iters);

  CHECK(improved.slot_of ==
        std::vector<Slot>{{0, 0}, {1, 0}, {0, 2}, {1, 2}, {0, 1}, {1, 1}});
  CHECK(layout_cost(improved, lm, fp).total == CU(2360));

  // The result is a fixed point.
  auto [again, trace2] = craft_improve(improved, lm, fp, MoveOptions{});
  CHECK(again == improved);
  CHECK(trace2.accepted.empty());
  CHECK(trace2.initial_cost == CU(2360));
  CHECK(trace2.final_cost == CU(2360));
}

TEST_CASE("restricting the move kinds changes the reachable endpoint") {
  LoadMatrix lm = example_loads();
  FloorPlan fp = example_floor();

  auto [unchanged, trace] =
      craft_improve(example_initial_layout(), lm, fp, only(MoveKind::Facility2Swap));
  CHECK(unchanged == example_initial_layout());
  CHECK(trace.accepted.empty());
  CHECK(trace.final_cost == CU(2580));

  auto [improved, col_trace] =
      craft_improve(example_initial_layout(), lm, fp, only(MoveKind::Column2Swap));
  CHECK(col_trace.final_cost == CU(2360));
  CHECK(col_trace.accepted.size() == 1);
  CHECK(layout_cost(improved, lm, fp).total == CU(2360));
}

TEST_CASE("iteration cap") {
  LoadMatrix lm = example_loads();
  FloorPlan fp = example_floor();

  MoveOptions zero;
  zero.max_iters = 0;
  auto [layout, trace] = craft_improve(example_initial_layout(), lm, fp, zero);
  CHECK(layout == example_initial_layout());
  CHECK(trace.accepted.empty());
  CHECK(trace.hit_max_iters);
  CHECK(trace.initial_cost == CU(2580));
  CHECK(trace.final_cost == CU(2580));

  MoveOptions negative;
  negative.max_iters = -1;
  CHECK(errc_of([&] {
          craft_improve(example_initial_layout(), lm, fp, negative);
        }) == Errc::InvalidArgument);
}

TEST_CASE("a capped run stops after the first accepted move") {
  FloorPlan fp = wide_floor();
  GridShape grid = derive_grid(fp);
  std::mt19937 rng(424242);

  bool found = false;
  for (int attempt = 0; attempt < 50 && !found; ++attempt) {
    LoadMatrix lm = random_load_matrix(rng, 6, 50, 30);
    Layout start = random_layout(rng, 6, grid);
    auto [full_layout, full] = craft_improve(start, lm, fp, MoveOptions{});
    if (full.accepted.size() < 2) continue;
    found = true;

    MoveOptions capped;
    capped.max_iters = 1;
    auto [layout, trace] = craft_improve(start, lm, fp, capped);
    CHECK(trace.accepted.size() == 1);
    CHECK(trace.hit_max_iters);
    CHECK(trace.accepted[0].move == full.accepted[0].move);
    CHECK(trace.final_cost == trace.initial_cost + trace.accepted[0].move.delta);
    CHECK(layout == apply_move(start, trace.accepted[0].move));
  }
  REQUIRE(found);
}

TEST_CASE("descent on random instances is monotone and oracle-bounded") {
  FloorPlan fp = wide_floor();
  GridShape grid = derive_grid(fp);
  REQUIRE(grid.slots() == 8);
  std::mt19937 rng(987654);

  for (int iter = 0; iter < 30; ++iter) {
    LoadMatrix lm = random_load_matrix(rng, 6, 50, 30);
    Layout start = random_layout(rng, 6, grid);
    CostValue initial = layout_cost(start, lm, fp).total;

    auto [layout, trace] = craft_improve(start, lm, fp, MoveOptions{});
    CAPTURE(iter);
    CHECK(trace.initial_cost == initial);
    CHECK_FALSE(trace.hit_max_iters);

    CostValue running = initial;
    for (const TraceEntry& e : trace.accepted) {
      CHECK(e.move.delta < 0);
      running += e.move.delta;
      CHECK(e.cost_after == running);
      CHECK(e.cost_after < initial);
    }
    CHECK(trace.final_cost == running);
    CHECK(layout_cost(layout, lm, fp).total == trace.final_cost);

    CostValue optimum = brute_force_optimum(lm, fp).best_cost;
    CHECK(optimum <= trace.final_cost);
    CHECK(trace.final_cost <= initial);

    // Serial evaluation must retrace the identical descent.
    MoveOptions serial;
    serial.parallel = false;
    auto [slayout, strace] = craft_improve(start, lm, fp, serial);
    CHECK(slayout == layout);
    CHECK(strace.initial_cost == trace.initial_cost);
    CHECK(strace.final_cost == trace.final_cost);
    REQUIRE(strace.accepted.size() == trace.accepted.size());
    for (std::size_t i = 0; i < trace.accepted.size(); ++i) {
      CHECK(strace.accepted[i].move == trace.accepted[i].move);
      CHECK(strace.accepted[i].cost_after == trace.accepted[i].cost_after);
    }
  }
}

TEST_CASE("identical runs give identical traces") {
  LoadMatrix lm = example_loads();
  FloorPlan fp = example_floor();
  auto [a, ta] = craft_improve(example_initial_layout(), lm, fp, MoveOptions{});
  auto [b, tb] = craft_improve(example_initial_layout(), lm, fp, MoveOptions{});
  CHECK(a == b);
  CHECK(ta.initial_cost == tb.initial_cost);
  CHECK(ta.final_cost == tb.final_cost);
  REQUIRE(ta.accepted.size() == tb.accepted.size());
  for (std::size_t i = 0; i < ta.accepted.size(); ++i)
    CHECK(ta.accepted[i].move == tb.accepted[i].move);
}
