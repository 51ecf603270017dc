#include <algorithm>
#include <cstdio>
#include <sstream>

#include "rqd/bounds.hpp"
#include "rqd/cli.hpp"
#include "rqd/verify.hpp"

namespace rqd::cli {

namespace {

std::string cell_text(Cell c) {
  return "(" + std::to_string(c.x) + ", " + std::to_string(c.y) + ")";
}

std::optional<Cell> first_uncovered_on_grid(const SpacedGrid& grid, const DiagonalCover& dc) {
  for (Cell c : grid.cells())
    if (!dc.sums.contains(c.x + c.y) && !dc.diffs.contains(c.x - c.y)) return c;
  return std::nullopt;
}

const char* flag(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_board(const RelaxedCover& cover) {
  const auto [m, n] = cover.dims();
  std::string out;
  for (int y = n - 1; y >= 0; --y) {
    for (int x = 0; x < m; ++x) {
      if (cover.rows().contains(y) || cover.cols().contains(x)) out += '#';
      else if (cover.sums().contains(x + y) || cover.diffs().contains(x - y)) out += '+';
      else out += '.';
    }
    out += '\n';
  }
  return out;
}

std::vector<TableRow> table_rows(int max_n) {
  std::vector<TableRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    const int k = n / 4, r = n % 4;
    TableRow row{n, 0, 0, 0, beta_square(n)};
    row.lb_1987 = r <= 1 ? 2 * k : 2 * k + 1;
    row.lb_1995 = r == 0 ? 2 * k : 2 * k + 1;
    row.lb_2007 = r == 3 && n > 11 ? 2 * k + 2 : row.lb_1995;
    rows.push_back(row);
  }
  return rows;
}

std::string table_output(int max_n, Format format) {
  static const char* const kCase[] = {"4k", "4k+1", "4k+2", "4k+3"};
  std::ostringstream os;
  if (format == Format::Csv) {
    os << "n,case,lb_1987,lb_1995,lb_2007,beta\n";
    for (const TableRow& r : table_rows(max_n))
      os << r.n << ',' << kCase[r.n % 4] << ',' << r.lb_1987 << ',' << r.lb_1995 << ','
         << r.lb_2007 << ',' << r.beta << '\n';
    return os.str();
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%6s %-6s %8s %8s %8s %6s\n", "n", "case", "1987", "1995",
                "2007", "beta");
  os << buf;
  for (const TableRow& r : table_rows(max_n)) {
    std::snprintf(buf, sizeof buf, "%6d %-6s %8d %8d %8d %6d\n", r.n, kCase[r.n % 4], r.lb_1987,
                  r.lb_1995, r.lb_2007, r.beta);
    os << buf;
  }
  return os.str();
}

FigureStats figure_stats(int max_dim) {
  FigureStats s;
  for (int m = 1; m <= max_dim; ++m) {
    for (int n = 1; n <= max_dim; ++n) {
      if (m == n) continue;
      const BoardTag tag = classify_board(m, n).tag;
      if (tag == BoardTag::Trivial) continue;
      ++s.nontrivial;
      if (tag == BoardTag::Improved) ++s.improved;
    }
  }
  return s;
}

std::string figure_output(int max_dim, Format format) {
  std::ostringstream os;
  const int width = 3;
  if (format == Format::Csv) {
    os << "m\\n";
    for (int n = 1; n <= max_dim; ++n) os << ',' << n;
    os << '\n';
  } else {
    os << std::string(width + 1, ' ');
    for (int n = 1; n <= max_dim; ++n) {
      std::string h = std::to_string(n);
      os << std::string(std::max<int>(width - static_cast<int>(h.size()), 0) + 1, ' ') << h;
    }
    os << '\n';
  }
  for (int m = 1; m <= max_dim; ++m) {
    std::string label = std::to_string(m);
    if (format == Format::Csv) os << label;
    else os << std::string(std::max<int>(width - static_cast<int>(label.size()), 0), ' ') << label << ' ';
    for (int n = 1; n <= max_dim; ++n) {
      const std::string mk = marker(classify_board(m, n).tag);
      if (format == Format::Csv) os << ',' << mk;
      else os << std::string(std::max<int>(width - static_cast<int>(mk.size()), 0) + 1, ' ') << mk;
    }
    os << '\n';
  }
  const FigureStats s = figure_stats(max_dim);
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "# improved fraction among non-trivial non-square boards: %.4f (%ld/%ld)\n",
                s.fraction(), s.improved, s.nontrivial);
  os << buf;
  return os.str();
}

std::string verify_report(const CoverDocument& doc, bool& valid) {
  std::ostringstream os;
  if (doc.kind == CoverKind::Bishop) {
    const SpacedGrid grid = target_grid(doc);
    const DiagonalCover dc = as_diagonal_cover(doc);
    const auto miss = first_uncovered_on_grid(grid, dc);
    valid = !miss;
    os << (valid ? "valid" : "invalid") << ", size " << dc.size();
    if (miss) os << ": cell " << cell_text(*miss) << " uncovered";
    os << '\n';
    if (valid && is_perfect_cover(grid, dc)) os << "perfect: yes\n";
    return os.str();
  }

  const RelaxedCover cover = as_relaxed_cover(doc);
  const auto miss = first_uncovered(cover);
  valid = !miss;
  os << (valid ? "valid" : "invalid") << ", size " << cover.size();
  if (miss) os << ": cell " << cell_text(*miss) << " uncovered";
  os << '\n';

  const auto [m, n] = cover.dims();
  if (m == n && n % 4 == 3 && cover.size() == (n - 1) / 2) {
    const TightReport t = tight_analysis(cover);
    os << "tight (a) distinct lines: " << flag(t.distinct_lines) << '\n'
       << "tight (b) U square: " << flag(t.u_is_square) << '\n'
       << "tight (c) edge singly covered: " << flag(t.edge_singly_covered) << '\n'
       << "tight (d) diagonals meet edge twice: " << flag(t.diagonals_hit_edge_twice) << '\n'
       << "tight (e) corner diagonals balanced: "
       << flag(t.corner_antidiagonal_chosen_and_balanced) << '\n';
    for (const std::string& d : t.details) os << "  " << d << '\n';
  }
  return os.str();
}

}  // namespace rqd::cli
