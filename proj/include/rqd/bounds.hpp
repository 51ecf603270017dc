#pragma once

// Closed-form values for the relaxed queen (beta) and relaxed bishop (alpha)
// domination numbers, the spaced-grid diagonal lower bound, and the board
// classification used by the improvement grid.
//
// All arithmetic is integer-exact; functions throw std::out_of_range on
// non-positive arguments.

#include <string>

namespace rqd {

bool is_trivial_board(int m, int n);   // max{m,n} >= 3 min{m,n} - 2
bool is_critical_board(int m, int n);  // m + n = 2 (mod 4)
// Both even with m+n = 6 (mod 8), or both odd with m+n = 2 (mod 8).
bool is_hard_critical_board(int m, int n);
bool is_easy_critical_board(int m, int n);

int beta_square(int n);
int beta_rect(int m, int n);
int alpha_square(int n);
int alpha_rect(int m, int n);

// Lower bound on the queen domination number; equals beta_rect.
int gamma_lower(int m, int n);

// Lower bound on the number of sum (and difference) diagonals needed to
// cover an a-column by b-row spaced grid.
int spaced_grid_diag_lower(int a, int b);

enum class BoardTag { Trivial, Improved, Matched, SquareKnown };

struct BoardClass {
  BoardTag tag = BoardTag::Matched;
  int value = 0;  // beta_rect(m, n)

  bool operator==(const BoardClass&) const = default;
};

BoardClass classify_board(int m, int n);

// "trivial", "improved", "matched", "square-known".
std::string to_string(BoardTag tag);
// Improvement-grid marker: -1, +1, 0, or "S" for square-known.
std::string marker(BoardTag tag);

}  // namespace rqd
