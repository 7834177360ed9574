#pragma once

#include <cstdint>
#include <vector>

#include "mass/assign.hpp"
#include "mass/plan.hpp"

namespace mass {

// Exhaustive enumeration is capped at 8 facilities / 8 slots (8! = 40320);
// larger requests fail loudly instead of silently degrading.
inline constexpr int kOracleMaxN = 8;

struct AssignmentOracleResult {
  std::int64_t best_cost_micro = 0;
  Assignment witness;        // lexicographically smallest optimal permutation
  long optima_count = 0;
};

struct LayoutOracleResult {
  CostValue best_cost = 0;
  Layout witness;            // lexicographically smallest optimal placement
  long optima_count = 0;
};

// Minimum assignment cost over all n! permutations.
AssignmentOracleResult brute_force_assignment(const CostMatrix& cm);
AssignmentOracleResult brute_force_assignment_serial(const CostMatrix& cm);

// Every optimal permutation, sorted lexicographically. Same n <= 8 cap.
std::vector<Assignment> all_optimal_assignments(const CostMatrix& cm);

// Minimum layout cost over all injective facility -> slot placements.
LayoutOracleResult brute_force_optimum(const LoadMatrix& lm, const FloorPlan& fp);
LayoutOracleResult brute_force_optimum_serial(const LoadMatrix& lm, const FloorPlan& fp);

}  // namespace mass
