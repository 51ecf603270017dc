#pragma once

// Explicit witness covers meeting every closed-form upper bound.

#include <utility>

#include "rqd/board.hpp"
#include "rqd/diagonal_cover.hpp"

namespace rqd {

// Parity cover of the m x n bishop board: odd sums and even differences on
// the board rounded up to even dimensions, restricted back to m x n.
DiagonalCover bishop_cover(int m, int n);

// Top beta rows, right beta columns, bishop cover of the bottom-left rest.
RelaxedCover square_queen_cover(int n);

// Cover of size beta_rect(m, n) for any board.
RelaxedCover rect_queen_cover(int m, int n);

// Smallest easy-critical, non-trivial (M, N) >= (m, n) with the same
// beta_rect. Identity on easy-critical boards. Throws std::invalid_argument
// for trivial boards.
std::pair<int, int> critical_embedding(int m, int n);

// Restrict a cover to the sub-board anchored at the origin. Throws
// std::out_of_range if `dims` exceeds the source board.
RelaxedCover restrict_cover(const RelaxedCover& cover, BoardDims dims);
DiagonalCover restrict_cover(const DiagonalCover& cover, BoardDims from, BoardDims to);

// Q_e: {0, +-d, ..., +-e d, +-(e+2) d, +-(e+4) d, ..., +-(2k-e) d}.
// Throws std::invalid_argument unless 0 <= e <= k and d is even and positive.
IndexSet qe_set(int k, int e, int d);

// S = D = Q_e, the perfect cover of uniform_grid(k, d).
DiagonalCover uniform_grid_Qe(int k, int e, int d);

// The 2k+2 by 2k+2 uniformly spaced grid centred on the origin with
// coordinates (i - k - 1/2) d. Requires even positive d.
SpacedGrid uniform_grid(int k, int d);

}  // namespace rqd
