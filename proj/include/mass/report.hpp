#pragma once

#include <string>
#include <string_view>

#include "mass/craft.hpp"
#include "mass/oracle.hpp"

namespace mass {

// Orchestration results shared by the CLI and the tests. Each run_* step is
// the full pipeline up to its subcommand; every renderer below is
// byte-deterministic for fixed inputs.

struct AssignOutcome {
  CostMatrix cm;
  Assignment asg;
  AssignmentCost cost;
};

struct LayoutOutcome {
  AssignOutcome assign;
  FloorPlan fp;
  GridShape grid;
  Layout layout;
  CostValue cost = 0;
};

struct OptimizeOutcome {
  LayoutOutcome seed;
  Layout final_layout;
  Trace trace;
};

struct EvaluateOutcome {
  FloorPlan fp;
  GridShape grid;
  Layout layout;
  CostReport cost;
};

struct OracleOutcome {
  FloorPlan fp;
  GridShape grid;
  LayoutOracleResult result;
};

AssignOutcome run_assign(const LoadMatrix& lm);
LayoutOutcome run_layout(const LoadMatrix& lm, const FloorPlan& fp);
OptimizeOutcome run_optimize(const LoadMatrix& lm, const FloorPlan& fp, const MoveOptions& opts);
EvaluateOutcome run_evaluate(const LoadMatrix& lm, const FloorPlan& fp, const Layout& layout);
OracleOutcome run_oracle(const LoadMatrix& lm, const FloorPlan& fp);

// Text reports are key=value lines (plus a trailing `layout:` ASCII block
// where a placement exists); JSON reports have sorted keys and no volatile
// fields. Costs appear in whole units when integral, exact decimals otherwise.
std::string assign_text(const LoadMatrix& lm, const AssignOutcome& outcome);
std::string assign_json(const LoadMatrix& lm, const AssignOutcome& outcome);
std::string layout_text(const LoadMatrix& lm, const LayoutOutcome& outcome);
std::string layout_json(const LoadMatrix& lm, const LayoutOutcome& outcome);
std::string optimize_text(const LoadMatrix& lm, const OptimizeOutcome& outcome);
std::string optimize_json(const LoadMatrix& lm, const OptimizeOutcome& outcome);
std::string evaluate_text(const LoadMatrix& lm, const EvaluateOutcome& outcome);
std::string evaluate_json(const LoadMatrix& lm, const EvaluateOutcome& outcome);
std::string oracle_text(const LoadMatrix& lm, const OracleOutcome& outcome);
std::string oracle_json(const LoadMatrix& lm, const OracleOutcome& outcome);

// Exactly the pinned schema, nothing else:
//   { "initial_cost": int, "moves": [ { "kind": str, "participants": [str],
//     "cost_after": int } ], "final_cost": int }
// Participants are facility names for facility moves and column indices
// rendered as strings for column moves.
std::string trace_json(const LoadMatrix& lm, const Trace& trace);

// One <g> per facility in index order: a rectangle at true metric
// coordinates plus a centered label. Aisle gaps are visible because each
// rectangle spans the footprint, not the pitch.
std::string layout_svg(const Layout& layout, const FloorPlan& fp,
                       std::span<const std::string> names);

// Placement CSV for `evaluate`:
//   facility,row,col
//   <name>,<row>,<col>
// One line per facility of `lm` (any order); `#` comments and blank lines
// are skipped. Result is indexed like the load matrix.
Layout parse_placement_csv(std::string_view text, const LoadMatrix& lm);

}  // namespace mass
