#pragma once

// Board geometry: cells, the four line families, spaced grids, and the
// relaxed-cover / queen-placement value types shared by every other module.
//
// Coordinates: x is the column (0..m-1, left to right), y is the row
// (0..n-1, bottom to top). Sum diagonals fix x+y, difference diagonals fix
// x-y and keep the signed value as their index.

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rqd {

struct BoardDims {
  int m = 1;  // columns
  int n = 1;  // rows

  // Throws std::out_of_range unless m, n >= 1.
  static BoardDims make(int m, int n);

  int cell_count() const { return m * n; }
  bool operator==(const BoardDims&) const = default;
};

struct Cell {
  int x = 0;
  int y = 0;

  auto operator<=>(const Cell&) const = default;
};

enum class LineKind { Row, Col, Sum, Diff };

struct Line {
  LineKind kind = LineKind::Row;
  int index = 0;

  bool operator==(const Line&) const = default;
};

std::string to_string(LineKind kind);

struct IndexRange {
  int lo = 0;
  int hi = 0;  // inclusive

  bool contains(int v) const { return lo <= v && v <= hi; }
  int size() const { return hi - lo + 1; }
};

IndexRange row_range(BoardDims dims);
IndexRange col_range(BoardDims dims);
IndexRange sum_range(BoardDims dims);   // [0, m+n-2]
IndexRange diff_range(BoardDims dims);  // [-(n-1), m-1]
IndexRange line_range(BoardDims dims, LineKind kind);

bool on_board(BoardDims dims, Cell c);

// All on-board cells of `line`, ordered by x. Throws std::out_of_range when
// the index is outside the family's range for `dims`.
std::vector<Cell> line_cells(BoardDims dims, Line line);

bool covers(Line line, Cell cell);

using IndexSet = std::set<int>;

// p rows, p columns, p sum and p difference diagonals (as sets).
class RelaxedCover {
 public:
  // Throws std::out_of_range if any index is outside its family's range.
  RelaxedCover(BoardDims dims, IndexSet rows, IndexSet cols, IndexSet sums, IndexSet diffs);

  BoardDims dims() const { return dims_; }
  const IndexSet& rows() const { return rows_; }
  const IndexSet& cols() const { return cols_; }
  const IndexSet& sums() const { return sums_; }
  const IndexSet& diffs() const { return diffs_; }

  // Largest of the four cardinalities.
  int size() const;

  bool operator==(const RelaxedCover&) const = default;
  // Canonical order: rows, then cols, sums, diffs (lexicographic on sets).
  bool operator<(const RelaxedCover& o) const;

 private:
  BoardDims dims_;
  IndexSet rows_, cols_, sums_, diffs_;
};

// Cartesian product of column coordinates and row coordinates. Coordinates
// are arbitrary integers (negative allowed) so recentred grids fit too.
class SpacedGrid {
 public:
  // Throws std::invalid_argument unless both lists are non-empty and
  // strictly increasing.
  SpacedGrid(std::vector<int> cols, std::vector<int> rows);

  static SpacedGrid consecutive(int width, int height);

  const std::vector<int>& cols() const { return cols_; }
  const std::vector<int>& rows() const { return rows_; }
  int width() const { return static_cast<int>(cols_.size()); }
  int height() const { return static_cast<int>(rows_.size()); }
  int cell_count() const { return width() * height(); }

  Cell cell_at(int i, int j) const { return {cols_[i], rows_[j]}; }
  std::vector<Cell> cells() const;

  bool operator==(const SpacedGrid&) const = default;

 private:
  std::vector<int> cols_;
  std::vector<int> rows_;
};

struct QueenPlacement {
  BoardDims dims;
  std::set<Cell> queens;

  // Throws std::out_of_range for off-board queens.
  static QueenPlacement make(BoardDims dims, std::set<Cell> queens);
};

// Lines through every queen, as a relaxed cover of the same board.
RelaxedCover lines_through(const QueenPlacement& placement);

// Cells left uncovered once `rows` and `cols` are chosen. Throws
// std::out_of_range for bad indices and std::invalid_argument when every
// row or every column is chosen (the grid would be empty).
SpacedGrid uncovered_grid(BoardDims dims, const IndexSet& rows, const IndexSet& cols);

// Grid cells in an extremal column or extremal row.
std::set<Cell> hull_boundary(const SpacedGrid& grid);

}  // namespace rqd
