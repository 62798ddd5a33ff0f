#include "curv/assignment.hpp"

#include <limits>

#include "curv/error.hpp"

namespace curv {

AssignmentResult solve_assignment(const std::vector<std::vector<std::int64_t>>& cost) {
  const std::size_t m = cost.size();
  for (const auto& row : cost) {
    if (row.size() != m) throw Error(ErrorKind::InvalidParams, "assignment cost matrix must be square");
  }
  AssignmentResult result;
  result.column_of_row.assign(m, 0);
  if (m == 0) return result;

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  // 1-based arrays; index 0 is the virtual root of each augmenting search.
  std::vector<std::int64_t> row_pot(m + 1, 0), col_pot(m + 1, 0);
  std::vector<std::size_t> row_of_col(m + 1, 0), way(m + 1, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    row_of_col[0] = i;
    std::size_t j0 = 0;
    std::vector<std::int64_t> minv(m + 1, kInf);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = row_of_col[j0];
      std::int64_t delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const std::int64_t reduced = cost[i0 - 1][j - 1] - row_pot[i0] - col_pot[j];
        if (reduced < minv[j]) {
          minv[j] = reduced;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          row_pot[row_of_col[j]] += delta;
          col_pot[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of_col[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      row_of_col[j0] = row_of_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  for (std::size_t j = 1; j <= m; ++j) result.column_of_row[row_of_col[j] - 1] = j - 1;
  for (std::size_t i = 0; i < m; ++i) result.cost += cost[i][result.column_of_row[i]];
  return result;
}

AssignmentResult lexicographic_optimal_assignment(const std::vector<std::vector<std::int64_t>>& cost) {
  const AssignmentResult best = solve_assignment(cost);
  const std::size_t m = cost.size();
  AssignmentResult out;
  out.cost = best.cost;
  out.column_of_row.assign(m, 0);
  std::vector<bool> taken(m, false);
  std::int64_t remaining = best.cost;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (taken[j]) continue;
      std::vector<std::vector<std::int64_t>> sub;
      for (std::size_t r = i + 1; r < m; ++r) {
        std::vector<std::int64_t> row;
        for (std::size_t c = 0; c < m; ++c) {
          if (!taken[c] && c != j) row.push_back(cost[r][c]);
        }
        sub.push_back(std::move(row));
      }
      const std::int64_t rest = solve_assignment(sub).cost;
      if (cost[i][j] + rest == remaining) {
        out.column_of_row[i] = j;
        taken[j] = true;
        remaining -= cost[i][j];
        break;
      }
    }
  }
  return out;
}

}  // namespace curv
