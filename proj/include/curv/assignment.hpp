#pragma once

#include <cstdint>
#include <vector>

namespace curv {

struct AssignmentResult {
  std::int64_t cost = 0;
  std::vector<std::size_t> column_of_row;
};

// Minimum-cost perfect assignment on a square integer cost matrix
// (Hungarian method with potentials, O(m^3)). An empty matrix costs 0.
AssignmentResult solve_assignment(const std::vector<std::vector<std::int64_t>>& cost);

// Among all optimal assignments, the one whose column sequence
// (column_of_row[0], column_of_row[1], ...) is lexicographically smallest.
AssignmentResult lexicographic_optimal_assignment(const std::vector<std::vector<std::int64_t>>& cost);

}  // namespace curv
