#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rqd/board.hpp"
#include "rqd/diagonal_cover.hpp"

namespace rqd {

// Raised when a caller violates a documented precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

bool is_relaxed_cover(const RelaxedCover& cover);

// Lowest (x, then y) board cell no chosen line covers.
std::optional<Cell> first_uncovered(const RelaxedCover& cover);

bool is_diagonal_cover(const SpacedGrid& grid, const DiagonalCover& dc);

// Diagonal cover with exactly (a+b-2)/2 lines of each kind. Always false
// when a+b is odd.
bool is_perfect_cover(const SpacedGrid& grid, const DiagonalCover& dc);

bool is_dominating_placement(const QueenPlacement& placement);

// Structure of a tight cover on an n x n board with n = 3 (mod 4) and size
// (n-1)/2. U is the sub-board spanned by the extreme unchosen columns and
// rows; its edge cells are the cells on U's border.
struct TightReport {
  bool distinct_lines = false;             // all four families have p lines
  bool u_is_square = false;
  bool edge_singly_covered = false;        // each edge cell of U on one line
  bool diagonals_hit_edge_twice = false;   // each chosen diagonal meets 2 edge cells
  bool corner_antidiagonal_chosen_and_balanced = false;
  std::vector<std::string> details;        // one entry per violation

  bool all() const {
    return distinct_lines && u_is_square && edge_singly_covered && diagonals_hit_edge_twice &&
           corner_antidiagonal_chosen_and_balanced;
  }
};

// Throws ContractError unless the board is square with side 3 (mod 4) and
// the cover's size is (n-1)/2. Coverage itself is not required: a cover that
// fails to cover the board simply reports the properties it breaks.
TightReport tight_analysis(const RelaxedCover& cover);

}  // namespace rqd
