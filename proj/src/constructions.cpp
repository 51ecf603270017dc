#include "rqd/constructions.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "rqd/bounds.hpp"

namespace rqd {

namespace {

IndexSet range_set(int lo, int hi_exclusive) {
  IndexSet s;
  for (int v = lo; v < hi_exclusive; ++v) s.insert(v);
  return s;
}

IndexSet filter(const IndexSet& s, IndexRange r) {
  IndexSet out;
  for (int v : s)
    if (r.contains(v)) out.insert(v);
  return out;
}

void require_within(BoardDims from, BoardDims to) {
  if (to.m < 1 || to.n < 1 || to.m > from.m || to.n > from.n)
    throw std::out_of_range("cannot restrict a " + std::to_string(from.m) + "x" +
                            std::to_string(from.n) + " cover to " + std::to_string(to.m) + "x" +
                            std::to_string(to.n));
}

// Trivial boards: every line in the short direction, rows on ties.
RelaxedCover trivial_cover(int m, int n) {
  const BoardDims dims{m, n};
  if (n <= m) return RelaxedCover(dims, range_set(0, n), {}, {}, {});
  return RelaxedCover(dims, {}, range_set(0, m), {}, {});
}

// Top p rows and right p columns; the bottom-left (m-p) x (n-p) remainder
// gets the parity bishop cover.
RelaxedCover corner_cover(int m, int n, int p) {
  DiagonalCover rest = bishop_cover(m - p, n - p);
  return RelaxedCover({m, n}, range_set(n - p, n), range_set(m - p, m), std::move(rest.sums),
                      std::move(rest.diffs));
}

}  // namespace

DiagonalCover bishop_cover(int m, int n) {
  const BoardDims dims = BoardDims::make(m, n);
  const BoardDims even{m + m % 2, n + n % 2};
  DiagonalCover dc;
  const IndexRange sr = sum_range(even), dr = diff_range(even);
  for (int s = sr.lo; s <= sr.hi; ++s)
    if (s % 2 != 0) dc.sums.insert(s);
  for (int d = dr.lo; d <= dr.hi; ++d)
    if (d % 2 == 0) dc.diffs.insert(d);
  return restrict_cover(dc, even, dims);
}

RelaxedCover square_queen_cover(int n) {
  BoardDims::make(n, n);
  if (is_trivial_board(n, n)) return trivial_cover(n, n);
  return corner_cover(n, n, beta_square(n));
}

RelaxedCover rect_queen_cover(int m, int n) {
  BoardDims::make(m, n);
  if (is_trivial_board(m, n)) return trivial_cover(m, n);
  if (is_easy_critical_board(m, n)) return corner_cover(m, n, (m + n - 2) / 4);
  const auto [big_m, big_n] = critical_embedding(m, n);
  return restrict_cover(rect_queen_cover(big_m, big_n), {m, n});
}

std::pair<int, int> critical_embedding(int m, int n) {
  if (is_trivial_board(m, n))
    throw std::invalid_argument("critical_embedding needs a non-trivial board");
  if (is_easy_critical_board(m, n)) return {m, n};

  // Smallest sum >= m+n that is 2 mod 4; hard-critical boards skip ahead 4.
  int step = ((2 - (m + n)) % 4 + 4) % 4;
  if (step == 0) step = 4;
  const int target = m + n + step;
  const int parity = target % 8 == 2 ? 0 : 1;  // both even, or both odd

  const int want = beta_rect(m, n);
  std::pair<int, int> best{-1, -1};
  int best_key = 0;
  for (int dm = 0; dm <= step; ++dm) {
    const int dn = step - dm;
    const int bm = m + dm, bn = n + dn;
    if (bm % 2 != parity || bn % 2 != parity) continue;
    if (is_trivial_board(bm, bn) || beta_rect(bm, bn) != want) continue;
    // Balanced increments first, then the larger share to the smaller side.
    const int on_smaller = m <= n ? dm : dn;
    const int key = std::abs(dm - dn) * 16 - on_smaller;
    if (best.first < 0 || key < best_key) {
      best = {bm, bn};
      best_key = key;
    }
  }
  if (best.first < 0)
    throw std::logic_error("no easy-critical embedding for " + std::to_string(m) + "x" +
                           std::to_string(n));
  return best;
}

RelaxedCover restrict_cover(const RelaxedCover& cover, BoardDims dims) {
  require_within(cover.dims(), dims);
  return RelaxedCover(dims, filter(cover.rows(), row_range(dims)),
                      filter(cover.cols(), col_range(dims)), filter(cover.sums(), sum_range(dims)),
                      filter(cover.diffs(), diff_range(dims)));
}

DiagonalCover restrict_cover(const DiagonalCover& cover, BoardDims from, BoardDims to) {
  require_within(from, to);
  return {filter(cover.sums, sum_range(to)), filter(cover.diffs, diff_range(to))};
}

IndexSet qe_set(int k, int e, int d) {
  if (k < 0 || e < 0 || e > k) throw std::invalid_argument("Q_e needs 0 <= e <= k");
  if (d <= 0 || d % 2 != 0) throw std::invalid_argument("Q_e needs an even positive spacing");
  IndexSet q{0};
  for (int j = 1; j <= e; ++j) {
    q.insert(j * d);
    q.insert(-j * d);
  }
  for (int j = e + 2; j <= 2 * k - e; j += 2) {
    q.insert(j * d);
    q.insert(-j * d);
  }
  return q;
}

DiagonalCover uniform_grid_Qe(int k, int e, int d) {
  IndexSet q = qe_set(k, e, d);
  return {q, q};
}

SpacedGrid uniform_grid(int k, int d) {
  if (k < 0) throw std::invalid_argument("uniform grid needs k >= 0");
  if (d <= 0 || d % 2 != 0) throw std::invalid_argument("uniform grid needs even positive d");
  std::vector<int> coords;
  for (int i = 0; i < 2 * k + 2; ++i) coords.push_back((2 * i - 2 * k - 1) * (d / 2));
  return SpacedGrid(coords, coords);
}

}  // namespace rqd
