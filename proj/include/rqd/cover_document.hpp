#pragma once

// Flat text form of a cover:
//
//   schema_version: 1
//   kind: relaxed-queen
//   m: 11
//   n: 11
//   rows: 6 7 8 9 10
//   cols: 6 7 8 9 10
//   sums: ...
//   diffs: ...
//
// Bishop covers of a spaced grid add `grid_cols:` and `grid_rows:` lines; m
// and n are then the grid's width and height. Arrays are sorted ascending.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rqd/board.hpp"
#include "rqd/diagonal_cover.hpp"

namespace rqd {

inline constexpr int kSchemaVersion = 1;

enum class CoverKind { RelaxedQueen, Bishop };

std::string to_string(CoverKind kind);

struct CoverDocument {
  int schema_version = kSchemaVersion;
  CoverKind kind = CoverKind::RelaxedQueen;
  int m = 0;
  int n = 0;
  std::vector<int> rows, cols, sums, diffs;
  std::optional<std::vector<int>> grid_cols, grid_rows;

  bool operator==(const CoverDocument&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, std::string field, const std::string& what);

  int line() const { return line_; }  // 1-based, 0 for missing fields
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

CoverDocument to_document(const RelaxedCover& cover);
CoverDocument to_document(BoardDims dims, const DiagonalCover& cover);
CoverDocument to_document(const SpacedGrid& grid, const DiagonalCover& cover);

std::string emit(const CoverDocument& doc);

// Accepts blank lines, '#' comments and fields in any order. Throws
// ParseError on unknown or duplicate fields, bad integers, unsorted or
// out-of-range arrays.
CoverDocument parse_cover_document(std::string_view text);

// Throws std::invalid_argument for grid documents and bishop documents
// that pick rows or columns.
RelaxedCover as_relaxed_cover(const CoverDocument& doc);
DiagonalCover as_diagonal_cover(const CoverDocument& doc);
// The grid a document's diagonals must cover: its spaced grid if present,
// else the full m x n board.
SpacedGrid target_grid(const CoverDocument& doc);

}  // namespace rqd
