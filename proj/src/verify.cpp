#include "rqd/verify.hpp"

#include <algorithm>
#include <vector>

namespace rqd {

namespace {

int cover_multiplicity(const RelaxedCover& c, Cell cell) {
  return static_cast<int>(c.rows().contains(cell.y)) + c.cols().contains(cell.x) +
         c.sums().contains(cell.x + cell.y) + c.diffs().contains(cell.x - cell.y);
}

// Flat membership table over [min, max] of an index set.
class Membership {
 public:
  explicit Membership(const IndexSet& s) {
    if (s.empty()) return;
    lo_ = *s.begin();
    in_.assign(static_cast<std::size_t>(*s.rbegin() - lo_ + 1), 0);
    for (int v : s) in_[static_cast<std::size_t>(v - lo_)] = 1;
  }

  bool operator()(int v) const {
    const auto i = static_cast<std::size_t>(v - lo_);
    return v >= lo_ && i < in_.size() && in_[i];
  }

 private:
  int lo_ = 0;
  std::vector<char> in_;
};

std::string show(Cell c) { return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")"; }

}  // namespace

std::optional<Cell> first_uncovered(const RelaxedCover& cover) {
  const BoardDims d = cover.dims();
  const Membership row(cover.rows()), col(cover.cols()), sum(cover.sums()), diff(cover.diffs());
  for (int x = 0; x < d.m; ++x) {
    if (col(x)) continue;
    for (int y = 0; y < d.n; ++y)
      if (!row(y) && !sum(x + y) && !diff(x - y)) return Cell{x, y};
  }
  return std::nullopt;
}

bool is_relaxed_cover(const RelaxedCover& cover) { return !first_uncovered(cover).has_value(); }

bool is_diagonal_cover(const SpacedGrid& grid, const DiagonalCover& dc) {
  const Membership sum(dc.sums), diff(dc.diffs);
  for (int x : grid.cols())
    for (int y : grid.rows())
      if (!sum(x + y) && !diff(x - y)) return false;
  return true;
}

bool is_perfect_cover(const SpacedGrid& grid, const DiagonalCover& dc) {
  const int total = grid.width() + grid.height();
  if (total % 2 != 0) return false;
  const auto want = static_cast<std::size_t>((total - 2) / 2);
  return dc.sums.size() == want && dc.diffs.size() == want && is_diagonal_cover(grid, dc);
}

bool is_dominating_placement(const QueenPlacement& placement) {
  if (placement.queens.empty()) return false;
  return is_relaxed_cover(lines_through(placement));
}

TightReport tight_analysis(const RelaxedCover& cover) {
  const BoardDims dims = cover.dims();
  const int n = dims.n;
  if (dims.m != n || n % 4 != 3)
    throw ContractError("tight analysis needs an n x n board with n = 3 (mod 4)");
  const int p = (n - 1) / 2;
  const int k = (p - 1) / 2;
  if (cover.size() != p)
    throw ContractError("tight analysis needs a cover of size " + std::to_string(p) + ", got " +
                        std::to_string(cover.size()));

  TightReport rep;
  auto sz = [](const IndexSet& s) { return static_cast<int>(s.size()); };

  // (a)
  rep.distinct_lines = sz(cover.rows()) == p && sz(cover.cols()) == p &&
                       sz(cover.sums()) == p && sz(cover.diffs()) == p;
  if (!rep.distinct_lines)
    rep.details.push_back("line counts rows/cols/sums/diffs = " + std::to_string(sz(cover.rows())) +
                          "/" + std::to_string(sz(cover.cols())) + "/" +
                          std::to_string(sz(cover.sums())) + "/" +
                          std::to_string(sz(cover.diffs())) + ", expected " + std::to_string(p));

  // U spans the extreme unchosen columns and rows; p < n so both exist.
  int l = n, r = -1, b = n, t = -1;
  for (int v = 0; v < n; ++v) {
    if (!cover.cols().contains(v)) {
      l = std::min(l, v);
      r = std::max(r, v);
    }
    if (!cover.rows().contains(v)) {
      b = std::min(b, v);
      t = std::max(t, v);
    }
  }

  // (b)
  rep.u_is_square = r - l == t - b;
  if (!rep.u_is_square)
    rep.details.push_back("U is " + std::to_string(r - l + 1) + " wide and " +
                          std::to_string(t - b + 1) + " tall");

  std::vector<Cell> edge;
  for (int x = l; x <= r; ++x)
    for (int y = b; y <= t; ++y)
      if (x == l || x == r || y == b || y == t) edge.push_back({x, y});

  // (c)
  int bad_edge = 0;
  std::optional<Cell> first_bad;
  for (Cell c : edge) {
    if (cover_multiplicity(cover, c) != 1) {
      ++bad_edge;
      if (!first_bad) first_bad = c;
    }
  }
  rep.edge_singly_covered = bad_edge == 0;
  if (!rep.edge_singly_covered)
    rep.details.push_back(std::to_string(bad_edge) +
                          " edge cells of U not covered exactly once, first " + show(*first_bad));

  // (d)
  rep.diagonals_hit_edge_twice = true;
  auto check_diagonal = [&](const char* kind, int value, auto on_line) {
    const auto hits = std::count_if(edge.begin(), edge.end(), on_line);
    if (hits != 2) {
      rep.diagonals_hit_edge_twice = false;
      rep.details.push_back(std::string(kind) + " diagonal " + std::to_string(value) + " meets " +
                            std::to_string(hits) + " edge cells of U");
    }
  };
  for (int s : cover.sums())
    check_diagonal("sum", s, [s](Cell c) { return c.x + c.y == s; });
  for (int d : cover.diffs())
    check_diagonal("diff", d, [d](Cell c) { return c.x - c.y == d; });

  // (e) Sum diagonal through (l,t) and (r,b); difference diagonal through
  // (l,b) and (r,t). The rest of each family splits k above, k below.
  auto balanced = [&](const char* kind, const IndexSet& chosen, int pivot) {
    bool ok = true;
    if (!chosen.contains(pivot)) {
      ok = false;
      rep.details.push_back(std::string("corner ") + kind + " diagonal " + std::to_string(pivot) +
                            " not chosen");
    }
    const auto below = std::count_if(chosen.begin(), chosen.end(), [&](int v) { return v < pivot; });
    const auto above = std::count_if(chosen.begin(), chosen.end(), [&](int v) { return v > pivot; });
    if (below != k || above != k) {
      ok = false;
      rep.details.push_back(std::string(kind) + " diagonals split " + std::to_string(below) +
                            " below / " + std::to_string(above) + " above " +
                            std::to_string(pivot) + ", expected " + std::to_string(k) + " each");
    }
    return ok;
  };
  if (rep.u_is_square) {
    const bool sums_ok = balanced("sum", cover.sums(), l + t);
    const bool diffs_ok = balanced("diff", cover.diffs(), l - b);
    rep.corner_antidiagonal_chosen_and_balanced = sums_ok && diffs_ok;
  } else {
    rep.details.push_back("corner diagonals undefined: U is not square");
  }
  return rep;
}

}  // namespace rqd
