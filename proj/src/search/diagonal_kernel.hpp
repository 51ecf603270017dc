#pragma once

// Inner kernel shared by the beta, alpha and spaced-grid solvers: can a set
// of cells be covered with a bounded number of sum and difference lines?

#include <cstdint>
#include <vector>

#include "rqd/board.hpp"
#include "rqd/cell_set.hpp"

namespace rqd::detail {

// Dense cell indexing with each cell's sum-line and difference-line ids.
struct DiagonalInstance {
  int cell_count = 0;
  std::vector<int> cell_sum, cell_diff;      // cell -> line id
  std::vector<int> sum_value, diff_value;    // line id -> x+y / x-y
  std::vector<CellSet> sum_line, diff_line;  // line id -> cells

  // Cell (x, y) at index x * n + y.
  static DiagonalInstance for_board(BoardDims dims);
  // Cell (cols[i], rows[j]) at index i * height + j.
  static DiagonalInstance for_grid(const SpacedGrid& grid);
};

class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit = UINT64_MAX) : limit_(limit) {}
  // False once the budget is exhausted.
  bool spend() { return ++used_ <= limit_; }
  void add(std::uint64_t n) { used_ += n; }
  std::uint64_t used() const { return used_; }
  bool exhausted() const { return used_ > limit_; }

 private:
  std::uint64_t used_ = 0;
  std::uint64_t limit_;
};

enum class Outcome { Found, Infeasible, Cutoff };

struct DiagonalChoice {
  std::vector<int> sum_ids;
  std::vector<int> diff_ids;
};

// Decide whether `target` can be covered with at most `sum_budget` sum
// lines and `diff_budget` difference lines. `boundary` must be the hull
// boundary of `target` (a spaced grid): every line meets it in at most two
// cells, which bounds the search. Branches on the first open boundary cell
// (then the first open cell), sum line before difference line.
Outcome cover_with_diagonals(const DiagonalInstance& inst, const CellSet& target,
                             const CellSet& boundary, int sum_budget, int diff_budget,
                             NodeBudget& budget, DiagonalChoice* choice);

// Hull boundary of a set of cells laid out as a spaced grid, given masks for
// its extreme columns and rows.
inline CellSet boundary_of(const CellSet& target, const CellSet& left, const CellSet& right,
                           const CellSet& bottom, const CellSet& top) {
  return target & (left | right | bottom | top);
}

}  // namespace rqd::detail
