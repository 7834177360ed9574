#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mass/loads.hpp"

namespace mass {

// Nonnegative assignment-cost matrix in micro units. `synthetic` marks cells
// that were filled with the big-M value because the load cell was vacant;
// the mask survives reduce/adjust/shift so synthetic usage stays traceable.
struct CostMatrix {
  int n = 0;
  std::vector<std::int64_t> entries;   // row-major, micro units
  std::vector<std::uint8_t> synthetic; // row-major mask
  std::int64_t big_m = 0;              // fill value used at construction

  std::int64_t entry(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
  std::int64_t& entry(int i, int j) { return entries[static_cast<std::size_t>(i) * n + j]; }
  bool is_synthetic(int i, int j) const { return synthetic[static_cast<std::size_t>(i) * n + j] != 0; }

  // Plain matrix without synthetic cells (tests, ad-hoc instances).
  static CostMatrix from_entries(int n, std::vector<std::int64_t> entries);
};

// Permutation pairing each facility with its assigned partner:
// partner[i] = j means row i is assigned to column j.
struct Assignment {
  std::vector<int> partner;

  int n() const { return static_cast<int>(partner.size()); }
  bool operator==(const Assignment&) const = default;
  bool is_permutation() const;
};

// Set of whole rows/columns covering every zero entry of the matrix it was
// computed for; k() is minimum by construction (Konig).
struct LineCover {
  std::vector<int> rows;  // ascending
  std::vector<int> cols;  // ascending
  int k() const { return static_cast<int>(rows.size() + cols.size()); }
};

// Per-row / per-column constants for the shift theorem.
struct ShiftVectors {
  std::vector<std::int64_t> row_shift;
  std::vector<std::int64_t> col_shift;
};

struct AssignmentCost {
  std::int64_t total_micro = 0;
  bool uses_synthetic = false;
};

// Builds the assignment-cost matrix from a load matrix: present loads copied
// as-is, every vacant cell (diagonal included) filled with big-M and flagged
// synthetic. Default big-M is 1 unit-load above the sum of all present loads;
// an override must still exceed that sum.
CostMatrix to_cost_matrix(const LoadMatrix& lm,
                          std::optional<std::int64_t> big_m_micro = std::nullopt);

// Subtracts each row's minimum, then each column's minimum. Idempotent;
// leaves a zero in every row and column.
CostMatrix reduce(CostMatrix cm);

// Minimum line cover of the zero cells, built from a maximum bipartite
// matching: rows are augmented in ascending index order trying columns in
// ascending index order, then Konig alternating reachability from unmatched
// rows yields the cover. Deterministic.
LineCover min_line_cover(const CostMatrix& cm);

// Maximum matching on the zero cells, same deterministic augmentation as
// min_line_cover. match[i] is the column assigned to row i, or -1.
std::vector<int> max_zero_matching(const CostMatrix& cm);

// Hungarian adjustment: with m = minimum uncovered entry, subtracts m from
// every uncovered entry and adds m to every doubly-covered one. Requires the
// cover to cover all zeros and leave at least one cell uncovered.
CostMatrix adjust(CostMatrix cm, const LineCover& cover);

// Full reduce -> cover -> adjust loop; extracts a deterministic zero
// assignment once k == n. Internal guard of 10*n*n adjustment rounds.
Assignment hungarian_solve(const CostMatrix& cm);

// entry'(i,j) = entry(i,j) + row_shift[i] + col_shift[j]; rejects any shift
// that would make an entry negative. Synthetic mask preserved.
CostMatrix shift_costs(CostMatrix cm, const ShiftVectors& sv);

// Total cost of an assignment plus whether it crosses any synthetic cell.
AssignmentCost assignment_cost(const CostMatrix& cm, const Assignment& asg);

}  // namespace mass
