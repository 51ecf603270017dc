#pragma once

// Command-line front end. `run` is the whole program minus process setup,
// so tests can drive it with argument vectors and captured streams.

#include <iosfwd>
#include <string>
#include <vector>

#include "rqd/board.hpp"
#include "rqd/cover_document.hpp"

namespace rqd::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kUsage = 2, kCutoff = 3 };

enum class Format { Csv, Ascii };

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// One character per cell, top row first: '#' on a chosen row or column,
// '+' on a chosen diagonal only, '.' uncovered.
std::string render_board(const RelaxedCover& cover);

struct TableRow {
  int n = 0;
  int lb_1987 = 0;
  int lb_1995 = 0;
  int lb_2007 = 0;
  int beta = 0;
};

std::vector<TableRow> table_rows(int max_n);
std::string table_output(int max_n, Format format);

struct FigureStats {
  long improved = 0;   // non-square boards gaining 1 over (m+n-2)/4
  long nontrivial = 0; // non-trivial, non-square boards
  double fraction() const { return nontrivial == 0 ? 0.0 : double(improved) / double(nontrivial); }
};

FigureStats figure_stats(int max_dim);
// Grid of classify_board markers indexed by m (rows) and n (columns),
// then "# improved fraction among non-trivial non-square boards: ...".
std::string figure_output(int max_dim, Format format);

// "valid, size 5" or "invalid, size 3: cell (x, y) uncovered", plus the
// tight-structure flags when they apply. Sets `valid`.
std::string verify_report(const CoverDocument& doc, bool& valid);

}  // namespace rqd::cli
