#include "mass/craft.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "mass/errors.hpp"

namespace mass {

namespace {

std::vector<int> columns_of(const Layout& layout) {
  std::vector<int> col(layout.n());
  for (int i = 0; i < layout.n(); ++i) col[static_cast<std::size_t>(i)] = layout.slot_of[i].col;
  return col;
}

std::vector<int> occupied_columns(const Layout& layout) {
  std::vector<int> occ = columns_of(layout);
  std::sort(occ.begin(), occ.end());
  occ.erase(std::unique(occ.begin(), occ.end()), occ.end());
  return occ;
}

// Objective over column positions only: row separation never contributes to
// the access-point metric, so move deltas depend on columns alone.
CostValue column_cost(const std::vector<int>& col_of, const LoadMatrix& lm, const FloorPlan& fp) {
  CostValue total = 0;
  const std::int64_t pitch = fp.pitch();
  for (int i = 0; i < lm.n(); ++i) {
    for (int j = 0; j < lm.n(); ++j) {
      if (i == j || lm.vacant(i, j)) continue;
      const int dc = std::abs(col_of[i] - col_of[j]);
      const std::int64_t dist = dc == 0 ? fp.aisle : pitch * dc;
      total += static_cast<CostValue>(lm.load_micro(i, j)) * dist;
    }
  }
  return total;
}

void transform_columns(std::vector<int>& col_of, const Move& move) {
  switch (move.kind) {
    case MoveKind::Facility2Swap:
      std::swap(col_of[move.participants[0]], col_of[move.participants[1]]);
      break;
    case MoveKind::Facility3Rotation: {
      const int a = move.participants[0], b = move.participants[1], c = move.participants[2];
      const int col_a = col_of[a];
      col_of[a] = col_of[b];
      col_of[b] = col_of[c];
      col_of[c] = col_a;
      break;
    }
    case MoveKind::Column2Swap:
      for (int& col : col_of) {
        if (col == move.participants[0])
          col = move.participants[1];
        else if (col == move.participants[1])
          col = move.participants[0];
      }
      break;
    case MoveKind::Column3Rotation:
      for (int& col : col_of) {
        if (col == move.participants[0])
          col = move.participants[1];
        else if (col == move.participants[1])
          col = move.participants[2];
        else if (col == move.participants[2])
          col = move.participants[0];
      }
      break;
  }
}

// Candidates in canonical order: kinds as declared, participants lexicographic.
// 3-rotations anchor at the smallest participant and include both directions.
std::vector<Move> candidate_moves(const Layout& layout, const MoveOptions& opts) {
  const int n = layout.n();
  std::vector<Move> moves;
  if (opts.facility2)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) moves.push_back(Move{MoveKind::Facility2Swap, {i, j}, 0});
  if (opts.facility3)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = a + 1; c < n; ++c) {
          if (c == b) continue;
          moves.push_back(Move{MoveKind::Facility3Rotation, {a, b, c}, 0});
        }
  const std::vector<int> occ = occupied_columns(layout);
  const int m = static_cast<int>(occ.size());
  if (opts.column2)
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        moves.push_back(Move{MoveKind::Column2Swap, {occ[i], occ[j]}, 0});
  if (opts.column3)
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        for (int c = a + 1; c < m; ++c) {
          if (c == b) continue;
          moves.push_back(Move{MoveKind::Column3Rotation, {occ[a], occ[b], occ[c]}, 0});
        }
  return moves;
}

void check_move(const Layout& layout, const Move& move) {
  const bool rotation =
      move.kind == MoveKind::Facility3Rotation || move.kind == MoveKind::Column3Rotation;
  const std::size_t want = rotation ? 3 : 2;
  if (move.participants.size() != want)
    fail(Errc::InvalidArgument, std::string(move_kind_name(move.kind)) + " takes " +
                                    std::to_string(want) + " participants");
  for (std::size_t i = 0; i < want; ++i)
    for (std::size_t j = i + 1; j < want; ++j)
      if (move.participants[i] == move.participants[j])
        fail(Errc::InvalidArgument, "move participants must be pairwise distinct");

  const bool facility =
      move.kind == MoveKind::Facility2Swap || move.kind == MoveKind::Facility3Rotation;
  const std::vector<int> occ = occupied_columns(layout);
  for (int p : move.participants) {
    if (facility) {
      if (p < 0 || p >= layout.n())
        fail(Errc::Unplaced, "facility " + std::to_string(p) + " is not placed");
    } else if (!std::binary_search(occ.begin(), occ.end(), p)) {
      fail(Errc::Unplaced, "column " + std::to_string(p) + " holds no facility");
    }
  }
}

std::vector<Move> evaluate_moves(const Layout& layout, const LoadMatrix& lm, const FloorPlan& fp,
                                 const MoveOptions& opts, bool parallel) {
  // Validates the layout (bounds, injectivity) and the floor plan.
  const CostValue base_cost = layout_cost(layout, lm, fp).total;
  std::vector<Move> moves = candidate_moves(layout, opts);
  const std::vector<int> base_cols = columns_of(layout);
  const std::int64_t count = static_cast<std::int64_t>(moves.size());
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < count; ++idx) {
      std::vector<int> cols = base_cols;
      transform_columns(cols, moves[idx]);
      moves[idx].delta = column_cost(cols, lm, fp) - base_cost;
    }
  } else {
    std::vector<int> cols(base_cols.size());
    for (std::int64_t idx = 0; idx < count; ++idx) {
      cols = base_cols;
      transform_columns(cols, moves[idx]);
      moves[idx].delta = column_cost(cols, lm, fp) - base_cost;
    }
  }
  return moves;
}

}  // namespace

const char* move_kind_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::Facility2Swap: return "facility-2-swap";
    case MoveKind::Facility3Rotation: return "facility-3-rotation";
    case MoveKind::Column2Swap: return "column-2-swap";
    case MoveKind::Column3Rotation: return "column-3-rotation";
  }
  return "unknown";
}

std::vector<Move> enumerate_moves(const Layout& layout, const LoadMatrix& lm, const FloorPlan& fp,
                                  const MoveOptions& opts) {
  return evaluate_moves(layout, lm, fp, opts, opts.parallel);
}

std::vector<Move> enumerate_moves_serial(const Layout& layout, const LoadMatrix& lm,
                                         const FloorPlan& fp, const MoveOptions& opts) {
  return evaluate_moves(layout, lm, fp, opts, false);
}

Layout apply_move(const Layout& layout, const Move& move) {
  check_move(layout, move);
  Layout next = layout;
  switch (move.kind) {
    case MoveKind::Facility2Swap:
      std::swap(next.slot_of[move.participants[0]], next.slot_of[move.participants[1]]);
      break;
    case MoveKind::Facility3Rotation: {
      const int a = move.participants[0], b = move.participants[1], c = move.participants[2];
      next.slot_of[a] = layout.slot_of[b];
      next.slot_of[b] = layout.slot_of[c];
      next.slot_of[c] = layout.slot_of[a];
      break;
    }
    case MoveKind::Column2Swap:
    case MoveKind::Column3Rotation: {
      std::vector<int> cols(next.slot_of.size());
      for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = next.slot_of[i].col;
      transform_columns(cols, move);
      for (std::size_t i = 0; i < cols.size(); ++i) next.slot_of[i].col = cols[i];
      break;
    }
  }
  return next;
}

std::pair<Layout, Trace> craft_improve(const Layout& layout, const LoadMatrix& lm,
                                       const FloorPlan& fp, const MoveOptions& opts) {
  if (opts.max_iters < 0) fail(Errc::InvalidArgument, "max_iters must be nonnegative");
  Trace trace;
  trace.initial_cost = layout_cost(layout, lm, fp).total;
  Layout cur = layout;
  CostValue cur_cost = trace.initial_cost;
  for (int round = 0;; ++round) {
    if (round == opts.max_iters) {
      trace.hit_max_iters = true;
      break;
    }
    const std::vector<Move> moves = enumerate_moves(cur, lm, fp, opts);
    const Move* best = nullptr;
    for (const Move& move : moves)
      if (move.delta < 0 && (best == nullptr || move.delta < best->delta)) best = &move;
    if (best == nullptr) break;
    cur = apply_move(cur, *best);
    cur_cost += best->delta;
    trace.accepted.push_back(TraceEntry{*best, cur_cost});
  }
  trace.final_cost = cur_cost;
  return {std::move(cur), trace};
}

}  // namespace mass
