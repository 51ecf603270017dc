#include <algorithm>
#include <functional>
#include <stdexcept>

#include "rqd/search.hpp"

namespace rqd {

namespace {

// Calls fn on every subset of `pool` with size in [lo, hi], as an IndexSet.
void for_each_subset(const std::vector<int>& pool, int lo, int hi,
                     const std::function<void(const IndexSet&)>& fn) {
  hi = std::min(hi, static_cast<int>(pool.size()));
  IndexSet chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    const int size = static_cast<int>(chosen.size());
    if (size >= lo && size <= hi) fn(chosen);
    if (size == hi) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      chosen.insert(pool[i]);
      rec(i + 1);
      chosen.erase(pool[i]);
    }
  };
  if (lo <= hi) rec(0);
}

std::vector<int> values_of(const IndexSet& s) { return {s.begin(), s.end()}; }

std::vector<int> complement(IndexRange r, const IndexSet& s) {
  std::vector<int> out;
  for (int v = r.lo; v <= r.hi; ++v)
    if (!s.contains(v)) out.push_back(v);
  return out;
}

}  // namespace

std::vector<DiagonalCover> enumerate_perfect_covers(const SpacedGrid& grid) {
  if (grid.width() > 10 || grid.height() > 10)
    throw std::invalid_argument("perfect-cover enumeration supports grids up to 10 x 10");
  std::vector<DiagonalCover> out;
  const int total = grid.width() + grid.height();
  if (total % 2 != 0) return out;
  const int want = (total - 2) / 2;

  const std::vector<Cell> cells = grid.cells();
  IndexSet sum_values, diff_values;
  for (Cell c : cells) {
    sum_values.insert(c.x + c.y);
    diff_values.insert(c.x - c.y);
  }

  // Each sum set S forces the differences of every cell it misses.
  for_each_subset(values_of(sum_values), want, want, [&](const IndexSet& sums) {
    IndexSet forced;
    for (Cell c : cells)
      if (!sums.contains(c.x + c.y)) forced.insert(c.x - c.y);
    const int slack = want - static_cast<int>(forced.size());
    if (slack < 0) return;
    std::vector<int> spare;
    for (int d : diff_values)
      if (!forced.contains(d)) spare.push_back(d);
    for_each_subset(spare, slack, slack, [&](const IndexSet& extra) {
      DiagonalCover dc{sums, forced};
      dc.diffs.insert(extra.begin(), extra.end());
      out.push_back(std::move(dc));
    });
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RelaxedCover> enumerate_beta_optima(int m, int n) {
  const BoardDims dims = BoardDims::make(m, n);
  if (m > 12 || n > 12) throw std::invalid_argument("beta optima enumeration supports sides up to 12");
  const auto best = beta_exact(m, n);
  const int p = best.value;

  std::vector<int> all_rows, all_cols;
  for (int y = 0; y < n; ++y) all_rows.push_back(y);
  for (int x = 0; x < m; ++x) all_cols.push_back(x);
  const IndexRange sr = sum_range(dims), dr = diff_range(dims);

  std::vector<RelaxedCover> out;
  for_each_subset(all_rows, 0, p, [&](const IndexSet& rows) {
    for_each_subset(all_cols, 0, p, [&](const IndexSet& cols) {
      // Cells the rows and columns miss, with their hull boundary.
      std::vector<Cell> open;
      int l = m, r = -1, b = n, t = -1;
      for (int x = 0; x < m; ++x) {
        if (cols.contains(x)) continue;
        for (int y = 0; y < n; ++y) {
          if (rows.contains(y)) continue;
          open.push_back({x, y});
          l = std::min(l, x), r = std::max(r, x), b = std::min(b, y), t = std::max(t, y);
        }
      }
      const auto on_boundary = [&](Cell c) { return c.x == l || c.x == r || c.y == b || c.y == t; };
      if (std::count_if(open.begin(), open.end(), on_boundary) > 4 * p) return;

      IndexSet grid_sums;
      for (Cell c : open) grid_sums.insert(c.x + c.y);
      const std::vector<int> other_sums = complement(sr, grid_sums);

      // S = (S meeting the open cells) + (S missing them); D = forced + any.
      for_each_subset(values_of(grid_sums), 0, p, [&](const IndexSet& core) {
        IndexSet forced;
        for (Cell c : open)
          if (!core.contains(c.x + c.y)) forced.insert(c.x - c.y);
        if (static_cast<int>(forced.size()) > p) return;
        const std::vector<int> spare_diffs = complement(dr, forced);
        const int sum_room = p - static_cast<int>(core.size());
        const int diff_room = p - static_cast<int>(forced.size());
        for_each_subset(other_sums, 0, sum_room, [&](const IndexSet& pad) {
          IndexSet sums = core;
          sums.insert(pad.begin(), pad.end());
          for_each_subset(spare_diffs, 0, diff_room, [&](const IndexSet& extra) {
            IndexSet diffs = forced;
            diffs.insert(extra.begin(), extra.end());
            out.emplace_back(dims, rows, cols, sums, diffs);
          });
        });
      });
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rqd
