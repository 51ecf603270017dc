#include <stdexcept>

#include "diagonal_kernel.hpp"
#include "rqd/search.hpp"

namespace rqd {

namespace {

using detail::DiagonalChoice;
using detail::DiagonalInstance;
using detail::NodeBudget;
using detail::Outcome;

SearchResult<DiagonalCover> minimize_diagonals(const DiagonalInstance& inst,
                                               const CellSet& target, const CellSet& boundary,
                                               const SearchOptions& opts) {
  const int start = opts.start.value_or(1);
  if (start < 1) throw std::invalid_argument("search start must be positive");
  NodeBudget budget(opts.cutoff.value_or(UINT64_MAX));
  for (int p = start;; ++p) {
    DiagonalChoice choice;
    const Outcome o = detail::cover_with_diagonals(inst, target, boundary, p, p, budget, &choice);
    if (o == Outcome::Cutoff) return {p, std::nullopt, budget.used(), SearchStatus::CutoffReached};
    if (o == Outcome::Found) {
      DiagonalCover dc;
      for (int id : choice.sum_ids) dc.sums.insert(inst.sum_value[id]);
      for (int id : choice.diff_ids) dc.diffs.insert(inst.diff_value[id]);
      return {p, std::move(dc), budget.used(), SearchStatus::Optimal};
    }
  }
}

}  // namespace

SearchResult<DiagonalCover> alpha_exact(int m, int n, const SearchOptions& opts) {
  return grid_min_diagonals(SpacedGrid::consecutive(BoardDims::make(m, n).m, n), opts);
}

SearchResult<DiagonalCover> grid_min_diagonals(const SpacedGrid& grid, const SearchOptions& opts) {
  const DiagonalInstance inst = DiagonalInstance::for_grid(grid);
  const int w = grid.width(), h = grid.height();
  CellSet target, boundary;
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < h; ++j) {
      target.set(i * h + j);
      if (i == 0 || i == w - 1 || j == 0 || j == h - 1) boundary.set(i * h + j);
    }
  return minimize_diagonals(inst, target, boundary, opts);
}

}  // namespace rqd
