#include "rqd/cover_document.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace rqd {

namespace {

std::vector<int> to_vector(const IndexSet& s) { return {s.begin(), s.end()}; }

IndexSet to_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

std::string join(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += ' ' + std::to_string(x);
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view tok, int line, const std::string& field) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, field, "not an integer: '" + std::string(tok) + "'");
  return v;
}

std::vector<int> parse_array(std::string_view value, int line, const std::string& field) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < value.size()) {
    const auto start = value.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    auto end = value.find_first_of(" \t", start);
    if (end == std::string_view::npos) end = value.size();
    out.push_back(parse_int(value.substr(start, end - start), line, field));
    pos = end;
  }
  if (std::adjacent_find(out.begin(), out.end(), std::greater_equal<>()) != out.end())
    throw ParseError(line, field, "array must be strictly ascending");
  return out;
}

void check_range(const std::vector<int>& v, IndexRange r, int line, const std::string& field) {
  for (int x : v)
    if (!r.contains(x))
      throw ParseError(line, field,
                       std::to_string(x) + " outside [" + std::to_string(r.lo) + ", " +
                           std::to_string(r.hi) + "]");
}

}  // namespace

std::string to_string(CoverKind kind) {
  return kind == CoverKind::RelaxedQueen ? "relaxed-queen" : "bishop";
}

ParseError::ParseError(int line, std::string field, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", field '" + field + "': " + what),
      line_(line),
      field_(std::move(field)) {}

CoverDocument to_document(const RelaxedCover& cover) {
  CoverDocument doc;
  doc.kind = CoverKind::RelaxedQueen;
  doc.m = cover.dims().m;
  doc.n = cover.dims().n;
  doc.rows = to_vector(cover.rows());
  doc.cols = to_vector(cover.cols());
  doc.sums = to_vector(cover.sums());
  doc.diffs = to_vector(cover.diffs());
  return doc;
}

CoverDocument to_document(BoardDims dims, const DiagonalCover& cover) {
  CoverDocument doc;
  doc.kind = CoverKind::Bishop;
  doc.m = dims.m;
  doc.n = dims.n;
  doc.sums = to_vector(cover.sums);
  doc.diffs = to_vector(cover.diffs);
  return doc;
}

CoverDocument to_document(const SpacedGrid& grid, const DiagonalCover& cover) {
  CoverDocument doc = to_document(BoardDims{grid.width(), grid.height()}, cover);
  doc.grid_cols = grid.cols();
  doc.grid_rows = grid.rows();
  return doc;
}

std::string emit(const CoverDocument& doc) {
  std::ostringstream os;
  os << "schema_version: " << doc.schema_version << '\n'
     << "kind: " << to_string(doc.kind) << '\n'
     << "m: " << doc.m << '\n'
     << "n: " << doc.n << '\n';
  if (doc.grid_cols) os << "grid_cols:" << join(*doc.grid_cols) << '\n';
  if (doc.grid_rows) os << "grid_rows:" << join(*doc.grid_rows) << '\n';
  os << "rows:" << join(doc.rows) << '\n'
     << "cols:" << join(doc.cols) << '\n'
     << "sums:" << join(doc.sums) << '\n'
     << "diffs:" << join(doc.diffs) << '\n';
  return os.str();
}

CoverDocument parse_cover_document(std::string_view text) {
  std::map<std::string, std::pair<int, std::string>> fields;  // name -> (line, value)
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "", "expected 'field: value'");
    const std::string name(trim(line.substr(0, colon)));
    static const char* const kKnown[] = {"schema_version", "kind", "m", "n", "rows", "cols",
                                         "sums", "diffs", "grid_cols", "grid_rows"};
    if (std::find(std::begin(kKnown), std::end(kKnown), name) == std::end(kKnown))
      throw ParseError(line_no, name, "unknown field");
    if (!fields.emplace(name, std::pair{line_no, std::string(trim(line.substr(colon + 1)))})
             .second)
      throw ParseError(line_no, name, "duplicate field");
  }

  const auto need = [&](const std::string& name) -> const std::pair<int, std::string>& {
    const auto it = fields.find(name);
    if (it == fields.end()) throw ParseError(0, name, "missing field");
    return it->second;
  };
  const auto scalar = [&](const std::string& name) {
    const auto& [line, value] = need(name);
    return parse_int(value, line, name);
  };
  const auto array = [&](const std::string& name) {
    const auto& [line, value] = need(name);
    return parse_array(value, line, name);
  };

  CoverDocument doc;
  doc.schema_version = scalar("schema_version");
  if (doc.schema_version != kSchemaVersion)
    throw ParseError(need("schema_version").first, "schema_version",
                     "unsupported version " + std::to_string(doc.schema_version));
  const auto& [kind_line, kind] = need("kind");
  if (kind == "relaxed-queen") doc.kind = CoverKind::RelaxedQueen;
  else if (kind == "bishop") doc.kind = CoverKind::Bishop;
  else throw ParseError(kind_line, "kind", "expected relaxed-queen or bishop");

  doc.m = scalar("m");
  doc.n = scalar("n");
  if (doc.m < 1 || doc.n < 1)
    throw ParseError(need(doc.m < 1 ? "m" : "n").first, doc.m < 1 ? "m" : "n",
                     "dimensions must be positive");
  doc.rows = array("rows");
  doc.cols = array("cols");
  doc.sums = array("sums");
  doc.diffs = array("diffs");

  const bool has_gc = fields.contains("grid_cols"), has_gr = fields.contains("grid_rows");
  if (has_gc != has_gr)
    throw ParseError(need(has_gc ? "grid_cols" : "grid_rows").first,
                     has_gc ? "grid_rows" : "grid_cols", "grid_cols and grid_rows come together");
  if (has_gc) {
    if (doc.kind != CoverKind::Bishop)
      throw ParseError(need("grid_cols").first, "grid_cols", "only bishop documents carry a grid");
    doc.grid_cols = array("grid_cols");
    doc.grid_rows = array("grid_rows");
    if (static_cast<int>(doc.grid_cols->size()) != doc.m)
      throw ParseError(need("grid_cols").first, "grid_cols", "length must equal m");
    if (static_cast<int>(doc.grid_rows->size()) != doc.n)
      throw ParseError(need("grid_rows").first, "grid_rows", "length must equal n");
    if (!doc.rows.empty() || !doc.cols.empty())
      throw ParseError(need(doc.rows.empty() ? "cols" : "rows").first,
                       doc.rows.empty() ? "cols" : "rows", "grid documents pick no lines");
    return doc;
  }

  const BoardDims dims{doc.m, doc.n};
  check_range(doc.rows, row_range(dims), need("rows").first, "rows");
  check_range(doc.cols, col_range(dims), need("cols").first, "cols");
  check_range(doc.sums, sum_range(dims), need("sums").first, "sums");
  check_range(doc.diffs, diff_range(dims), need("diffs").first, "diffs");
  if (doc.kind == CoverKind::Bishop && (!doc.rows.empty() || !doc.cols.empty()))
    throw ParseError(need(doc.rows.empty() ? "cols" : "rows").first,
                     doc.rows.empty() ? "cols" : "rows", "bishop documents pick no rows or columns");
  return doc;
}

RelaxedCover as_relaxed_cover(const CoverDocument& doc) {
  if (doc.grid_cols) throw std::invalid_argument("grid document is not a board cover");
  return RelaxedCover({doc.m, doc.n}, to_set(doc.rows), to_set(doc.cols), to_set(doc.sums),
                      to_set(doc.diffs));
}

DiagonalCover as_diagonal_cover(const CoverDocument& doc) {
  if (!doc.rows.empty() || !doc.cols.empty())
    throw std::invalid_argument("document picks rows or columns");
  return {to_set(doc.sums), to_set(doc.diffs)};
}

SpacedGrid target_grid(const CoverDocument& doc) {
  if (doc.grid_cols) return SpacedGrid(*doc.grid_cols, *doc.grid_rows);
  return SpacedGrid::consecutive(doc.m, doc.n);
}

}  // namespace rqd
