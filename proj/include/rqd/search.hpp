#pragma once

// Exhaustive solvers for the relaxed queen (beta), relaxed bishop (alpha),
// spaced-grid diagonal and queen domination (gamma) problems, plus the
// enumerators for perfect diagonal covers and optimal relaxed covers.
//
// Every solver walks p upward from its start value and runs a complete
// search at each p, so a returned Optimal value is proven minimal above the
// start. Boards are limited to 256 cells (CellSet capacity).

#include <cstdint>
#include <optional>
#include <vector>

#include "rqd/board.hpp"
#include "rqd/diagonal_cover.hpp"

namespace rqd {

enum class SearchStatus { Optimal, CutoffReached };

struct SearchOptions {
  // Node budget across the whole run. Parallel mode is skipped when set.
  std::optional<std::uint64_t> cutoff;
  // First p tried. Defaults: 1 for beta/alpha/grid, gamma_lower for gamma.
  std::optional<int> start;
  // Skip row/column choices that are not minimal under the board's
  // reflections (beta only). Does not change value or witness.
  bool symmetry = true;
  // Split the top-level frontier across OpenMP threads. Value, witness and
  // status match the serial run; node counts are aggregated.
  bool parallel = false;
};

template <typename Witness>
struct SearchResult {
  // Optimum, or on cutoff the p under search (every smaller p is refuted).
  int value = 0;
  std::optional<Witness> witness;
  std::uint64_t nodes = 0;
  SearchStatus status = SearchStatus::Optimal;
};

SearchResult<RelaxedCover> beta_exact(int m, int n, const SearchOptions& opts = {});
SearchResult<DiagonalCover> alpha_exact(int m, int n, const SearchOptions& opts = {});
SearchResult<DiagonalCover> grid_min_diagonals(const SpacedGrid& grid,
                                               const SearchOptions& opts = {});
SearchResult<QueenPlacement> gamma_exact(int m, int n, const SearchOptions& opts = {});

// Every (S, D) with |S| = |D| = (a+b-2)/2 covering the grid, drawn from the
// diagonals that meet the grid, sorted. Empty when a+b is odd. Grids are
// limited to 10 x 10.
std::vector<DiagonalCover> enumerate_perfect_covers(const SpacedGrid& grid);

// Every relaxed cover of size beta(m, n), in canonical order. Sizes come
// from beta_exact, not the closed form.
std::vector<RelaxedCover> enumerate_beta_optima(int m, int n);

}  // namespace rqd
