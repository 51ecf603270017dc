#include "rqd/board.hpp"

#include <algorithm>
#include <tuple>

namespace rqd {

BoardDims BoardDims::make(int m, int n) {
  if (m < 1 || n < 1)
    throw std::out_of_range("board dimensions must be positive, got " + std::to_string(m) +
                            "x" + std::to_string(n));
  return {m, n};
}

std::string to_string(LineKind kind) {
  switch (kind) {
    case LineKind::Row: return "row";
    case LineKind::Col: return "col";
    case LineKind::Sum: return "sum";
    case LineKind::Diff: return "diff";
  }
  return "?";
}

IndexRange row_range(BoardDims dims) { return {0, dims.n - 1}; }
IndexRange col_range(BoardDims dims) { return {0, dims.m - 1}; }
IndexRange sum_range(BoardDims dims) { return {0, dims.m + dims.n - 2}; }
IndexRange diff_range(BoardDims dims) { return {-(dims.n - 1), dims.m - 1}; }

IndexRange line_range(BoardDims dims, LineKind kind) {
  switch (kind) {
    case LineKind::Row: return row_range(dims);
    case LineKind::Col: return col_range(dims);
    case LineKind::Sum: return sum_range(dims);
    case LineKind::Diff: return diff_range(dims);
  }
  return {0, -1};
}

bool on_board(BoardDims dims, Cell c) {
  return c.x >= 0 && c.x < dims.m && c.y >= 0 && c.y < dims.n;
}

std::vector<Cell> line_cells(BoardDims dims, Line line) {
  if (!line_range(dims, line.kind).contains(line.index))
    throw std::out_of_range(to_string(line.kind) + " index " + std::to_string(line.index) +
                            " outside board");
  std::vector<Cell> out;
  for (int x = 0; x < dims.m; ++x) {
    int y = 0;
    switch (line.kind) {
      case LineKind::Row: y = line.index; break;
      case LineKind::Col:
        if (x != line.index) continue;
        for (int yy = 0; yy < dims.n; ++yy) out.push_back({x, yy});
        continue;
      case LineKind::Sum: y = line.index - x; break;
      case LineKind::Diff: y = x - line.index; break;
    }
    if (y >= 0 && y < dims.n) out.push_back({x, y});
  }
  return out;
}

bool covers(Line line, Cell cell) {
  switch (line.kind) {
    case LineKind::Row: return cell.y == line.index;
    case LineKind::Col: return cell.x == line.index;
    case LineKind::Sum: return cell.x + cell.y == line.index;
    case LineKind::Diff: return cell.x - cell.y == line.index;
  }
  return false;
}

namespace {

void check_indices(const IndexSet& s, IndexRange r, LineKind kind) {
  for (int v : s)
    if (!r.contains(v))
      throw std::out_of_range(to_string(kind) + " index " + std::to_string(v) + " outside [" +
                              std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]");
}

}  // namespace

RelaxedCover::RelaxedCover(BoardDims dims, IndexSet rows, IndexSet cols, IndexSet sums,
                           IndexSet diffs)
    : dims_(BoardDims::make(dims.m, dims.n)),
      rows_(std::move(rows)),
      cols_(std::move(cols)),
      sums_(std::move(sums)),
      diffs_(std::move(diffs)) {
  check_indices(rows_, row_range(dims_), LineKind::Row);
  check_indices(cols_, col_range(dims_), LineKind::Col);
  check_indices(sums_, sum_range(dims_), LineKind::Sum);
  check_indices(diffs_, diff_range(dims_), LineKind::Diff);
}

int RelaxedCover::size() const {
  return static_cast<int>(
      std::max({rows_.size(), cols_.size(), sums_.size(), diffs_.size()}));
}

bool RelaxedCover::operator<(const RelaxedCover& o) const {
  return std::tie(dims_.m, dims_.n, rows_, cols_, sums_, diffs_) <
         std::tie(o.dims_.m, o.dims_.n, o.rows_, o.cols_, o.sums_, o.diffs_);
}

SpacedGrid::SpacedGrid(std::vector<int> cols, std::vector<int> rows)
    : cols_(std::move(cols)), rows_(std::move(rows)) {
  auto strictly_increasing = [](const std::vector<int>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
  };
  if (cols_.empty() || rows_.empty()) throw std::invalid_argument("spaced grid is empty");
  if (!strictly_increasing(cols_) || !strictly_increasing(rows_))
    throw std::invalid_argument("spaced grid coordinates must be strictly increasing");
}

SpacedGrid SpacedGrid::consecutive(int width, int height) {
  std::vector<int> c(width > 0 ? width : 0), r(height > 0 ? height : 0);
  for (int i = 0; i < width; ++i) c[i] = i;
  for (int j = 0; j < height; ++j) r[j] = j;
  return SpacedGrid(std::move(c), std::move(r));
}

std::vector<Cell> SpacedGrid::cells() const {
  std::vector<Cell> out;
  out.reserve(cell_count());
  for (int x : cols_)
    for (int y : rows_) out.push_back({x, y});
  return out;
}

QueenPlacement QueenPlacement::make(BoardDims dims, std::set<Cell> queens) {
  for (const Cell& q : queens)
    if (!on_board(dims, q))
      throw std::out_of_range("queen (" + std::to_string(q.x) + "," + std::to_string(q.y) +
                              ") is off the board");
  return {dims, std::move(queens)};
}

RelaxedCover lines_through(const QueenPlacement& placement) {
  IndexSet rows, cols, sums, diffs;
  for (const Cell& q : placement.queens) {
    rows.insert(q.y);
    cols.insert(q.x);
    sums.insert(q.x + q.y);
    diffs.insert(q.x - q.y);
  }
  return RelaxedCover(placement.dims, rows, cols, sums, diffs);
}

SpacedGrid uncovered_grid(BoardDims dims, const IndexSet& rows, const IndexSet& cols) {
  check_indices(rows, row_range(dims), LineKind::Row);
  check_indices(cols, col_range(dims), LineKind::Col);
  std::vector<int> c, r;
  for (int x = 0; x < dims.m; ++x)
    if (!cols.contains(x)) c.push_back(x);
  for (int y = 0; y < dims.n; ++y)
    if (!rows.contains(y)) r.push_back(y);
  if (c.empty() || r.empty())
    throw std::invalid_argument("every row or every column is chosen; no uncovered grid");
  return SpacedGrid(std::move(c), std::move(r));
}

std::set<Cell> hull_boundary(const SpacedGrid& grid) {
  const int l = grid.cols().front(), r = grid.cols().back();
  const int b = grid.rows().front(), t = grid.rows().back();
  std::set<Cell> out;
  for (int x : grid.cols())
    for (int y : grid.rows())
      if (x == l || x == r || y == b || y == t) out.insert({x, y});
  return out;
}

}  // namespace rqd
