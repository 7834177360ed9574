#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mass/plan.hpp"

namespace mass {

enum class MoveKind {
  Facility2Swap,
  Facility3Rotation,
  Column2Swap,
  Column3Rotation,
};

const char* move_kind_name(MoveKind kind);

// One candidate exchange. For rotations, participants (a,b,c) mean a takes
// b's place, b takes c's, c takes a's; both cyclic directions are distinct
// candidates. Column moves exchange or rotate entire column contents and
// range over occupied columns only.
struct Move {
  MoveKind kind = MoveKind::Facility2Swap;
  std::vector<int> participants;  // facility indices or column indices
  CostValue delta = 0;            // cost after - cost before

  bool operator==(const Move&) const = default;
};

struct MoveOptions {
  bool facility2 = true;
  bool facility3 = true;
  bool column2 = true;
  bool column3 = true;
  int max_iters = 1000;
  bool parallel = true;  // evaluate candidate deltas with OpenMP
};

struct TraceEntry {
  Move move;
  CostValue cost_after = 0;
};

// Sequence of accepted moves; costs strictly decrease along `accepted`.
struct Trace {
  CostValue initial_cost = 0;
  std::vector<TraceEntry> accepted;
  CostValue final_cost = 0;
  bool hit_max_iters = false;
};

// All distinct candidate moves of the enabled kinds, each with its exact
// delta. Order: kinds in declaration order, then lexicographic participants.
std::vector<Move> enumerate_moves(const Layout& layout, const LoadMatrix& lm,
                                  const FloorPlan& fp, const MoveOptions& opts);

// Serial reference used by tests; the parallel path must match it exactly.
std::vector<Move> enumerate_moves_serial(const Layout& layout, const LoadMatrix& lm,
                                         const FloorPlan& fp, const MoveOptions& opts);

Layout apply_move(const Layout& layout, const Move& move);

// Steepest descent: each round evaluates all enabled moves and applies the
// single most-improving one (ties: first in enumeration order); stops when
// no move strictly improves or max_iters rounds are reached (flagged in the
// trace, best layout so far returned).
std::pair<Layout, Trace> craft_improve(const Layout& layout, const LoadMatrix& lm,
                                       const FloorPlan& fp, const MoveOptions& opts);

}  // namespace mass
