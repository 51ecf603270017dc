#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "rqd/bounds.hpp"
#include "rqd/cli.hpp"
#include "rqd/conjecture.hpp"
#include "rqd/constructions.hpp"
#include "rqd/search.hpp"
#include "rqd/verify.hpp"

namespace rqd::cli {

namespace {

// Raised for argument combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string problem, kind, question, path = "-", out_path, format, parity;
  int m = 0, n = 0, k = 0, e = 0, d = 2, p = 0, max = 0;
  std::vector<int> cols, rows;
  std::uint64_t cutoff = 0;
  bool check = false, parallel = false;
};

void need_dims(const CLI::App* cmd, const Args& a) {
  if (cmd->count("m") == 0 || cmd->count("n") == 0) throw UsageError("m and n are required");
  if (a.m < 1 || a.n < 1) throw UsageError("m and n must be positive");
}

void write_document(const CoverDocument& doc, const Args& a, std::ostream& out) {
  if (a.out_path.empty()) {
    out << emit(doc);
    return;
  }
  std::ofstream f(a.out_path);
  if (!f) throw UsageError("cannot write " + a.out_path);
  f << emit(doc);
}

std::string queens_text(const QueenPlacement& q) {
  std::string s = "queens:";
  for (Cell c : q.queens) s += " (" + std::to_string(c.x) + ", " + std::to_string(c.y) + ")";
  return s;
}

int cmd_bound(const CLI::App* cmd, const Args& a, std::ostream& out) {
  need_dims(cmd, a);
  if (a.problem == "beta") out << beta_rect(a.m, a.n) << '\n';
  else if (a.problem == "alpha") out << alpha_rect(a.m, a.n) << '\n';
  else if (a.problem == "gamma-lower") out << gamma_lower(a.m, a.n) << '\n';
  else if (a.problem == "grid-lower") out << spaced_grid_diag_lower(a.m, a.n) << '\n';
  else {
    const BoardClass c = classify_board(a.m, a.n);
    out << to_string(c.tag) << ' ' << marker(c.tag) << '\n';
  }
  return kOk;
}

int cmd_construct(const CLI::App* cmd, const Args& a, std::ostream& out, std::ostream& err) {
  CoverDocument doc;
  bool ok = false;
  if (a.kind == "qe") {
    if (cmd->count("--k") == 0 || cmd->count("--e") == 0) throw UsageError("qe needs --k and --e");
    const SpacedGrid grid = uniform_grid(a.k, a.d);
    const DiagonalCover dc = uniform_grid_Qe(a.k, a.e, a.d);
    ok = is_perfect_cover(grid, dc);
    doc = to_document(grid, dc);
  } else {
    need_dims(cmd, a);
    if (a.kind == "queen") {
      const RelaxedCover c = rect_queen_cover(a.m, a.n);
      ok = is_relaxed_cover(c);
      doc = to_document(c);
    } else {
      const DiagonalCover dc = bishop_cover(a.m, a.n);
      ok = is_diagonal_cover(SpacedGrid::consecutive(a.m, a.n), dc);
      doc = to_document(BoardDims{a.m, a.n}, dc);
    }
  }
  if (!ok) {
    err << "error: construction failed verification; nothing written\n";
    return kInvalid;
  }
  if (a.format == "ascii") {
    if (doc.grid_cols) throw UsageError("ascii rendering needs a board, not a spaced grid");
    RelaxedCover c({doc.m, doc.n}, {doc.rows.begin(), doc.rows.end()},
                   {doc.cols.begin(), doc.cols.end()}, {doc.sums.begin(), doc.sums.end()},
                   {doc.diffs.begin(), doc.diffs.end()});
    out << render_board(c);
    return kOk;
  }
  write_document(doc, a, out);
  return kOk;
}

int cmd_verify(const Args& a, std::ostream& out) {
  std::string text;
  if (a.path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(a.path);
    if (!f) throw UsageError("cannot read " + a.path);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  const CoverDocument doc = parse_cover_document(text);
  bool valid = false;
  out << verify_report(doc, valid);
  return valid ? kOk : kInvalid;
}

template <typename W>
int finish_search(const SearchResult<W>& r, std::ostream& out) {
  if (r.status == SearchStatus::CutoffReached) {
    out << "cutoff reached: every p < " << r.value << " refuted\n"
        << "nodes: " << r.nodes << '\n';
    return kCutoff;
  }
  out << r.value << '\n' << "nodes: " << r.nodes << '\n';
  return kOk;
}

int cmd_search(const CLI::App* cmd, const Args& a, std::ostream& out) {
  SearchOptions opts;
  if (cmd->count("--cutoff") != 0) opts.cutoff = a.cutoff;
  opts.parallel = a.parallel;

  if (a.problem == "grid") {
    if (a.cols.empty() || a.rows.empty()) throw UsageError("grid needs --cols and --rows");
    const SpacedGrid grid(a.cols, a.rows);
    const auto r = grid_min_diagonals(grid, opts);
    const int code = finish_search(r, out);
    if (r.witness) write_document(to_document(grid, *r.witness), a, out);
    return code;
  }
  need_dims(cmd, a);
  if (a.problem == "beta") {
    const auto r = beta_exact(a.m, a.n, opts);
    const int code = finish_search(r, out);
    if (r.witness) write_document(to_document(*r.witness), a, out);
    return code;
  }
  if (a.problem == "alpha") {
    const auto r = alpha_exact(a.m, a.n, opts);
    const int code = finish_search(r, out);
    if (r.witness) write_document(to_document(BoardDims{a.m, a.n}, *r.witness), a, out);
    return code;
  }
  const auto r = gamma_exact(a.m, a.n, opts);
  const int code = finish_search(r, out);
  if (r.witness) {
    out << queens_text(*r.witness) << '\n';
    write_document(to_document(lines_through(*r.witness)), a, out);
  }
  return code;
}

int cmd_conjecture(const CLI::App* cmd, const Args& a, std::ostream& out) {
  const bool has_p = cmd->count("--p") != 0, has_e = cmd->count("--e") != 0;
  if (a.check) {
    const ConjectureReport rep = a.question == "q2"
                                     ? check_conjecture_q2(has_p ? a.p : 5, has_e ? a.e : 10)
                                     : check_conjecture_q3(has_e ? a.e : 12);
    if (rep.holds()) {
      out << "holds\n"
          << "# " << rep.checked << " solutions checked, " << rep.range << '\n';
      return kOk;
    }
    out << "violations: " << rep.violations.size() << '\n';
    for (const std::string& v : rep.violations) out << v << '\n';
    return kInvalid;
  }
  if (a.question == "q2") {
    if (!has_p || !has_e) throw UsageError("q2 listings need --p and --e");
    for (const GridSolution& s : q2_solutions(a.p, a.e)) out << format_listing(s) << '\n';
    return kOk;
  }
  if (!has_e) throw UsageError("q3 listings need --e");
  std::optional<Parity> parity;
  if (a.parity == "odd") parity = Parity::Odd;
  if (a.parity == "even") parity = Parity::Even;
  for (const SubsetSolution& s : q3_solutions(a.e, parity)) out << format_listing(s) << '\n';
  return kOk;
}

Format table_format(const std::string& f) { return f == "ascii" ? Format::Ascii : Format::Csv; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relaxed queen and bishop domination: bounds, covers, searches"};
  app.name("rqd");
  app.require_subcommand(1);
  Args a;

  const auto dims = [&](CLI::App* cmd) {
    cmd->add_option("m,--m", a.m, "board width (columns)");
    cmd->add_option("n,--n", a.n, "board height (rows)");
  };

  auto* bound = app.add_subcommand("bound", "closed-form bound or board class");
  bound->add_option("problem", a.problem)
      ->required()
      ->check(CLI::IsMember({"beta", "alpha", "gamma-lower", "grid-lower", "classify"}));
  dims(bound);

  auto* construct = app.add_subcommand("construct", "emit a verified cover document");
  construct->add_option("kind", a.kind)->required()->check(CLI::IsMember({"queen", "bishop", "qe"}));
  dims(construct);
  construct->add_option("--k", a.k, "qe: grid is (2k+2) x (2k+2)");
  construct->add_option("--e", a.e, "qe: family index, 0 <= e <= k");
  construct->add_option("--d", a.d, "qe: even grid spacing")->capture_default_str();
  construct->add_option("--out", a.out_path, "write the document here instead of stdout");
  construct->add_option("--format", a.format, "doc or ascii")->check(CLI::IsMember({"doc", "ascii"}));

  auto* verify = app.add_subcommand("verify", "check a cover document");
  verify->add_option("path", a.path, "document file, or - for stdin")->capture_default_str();

  auto* search = app.add_subcommand("search", "exhaustive optimum with witness");
  search->add_option("problem", a.problem)
      ->required()
      ->check(CLI::IsMember({"beta", "alpha", "gamma", "grid"}));
  dims(search);
  search->add_option("--cols", a.cols, "grid: column coordinates")->delimiter(',');
  search->add_option("--rows", a.rows, "grid: row coordinates")->delimiter(',');
  search->add_option("--cutoff", a.cutoff, "node budget");
  search->add_flag("--parallel", a.parallel, "split the search across threads");
  search->add_option("--out", a.out_path, "write the witness document here");

  auto* conjecture = app.add_subcommand("conjecture", "solution listings or conjecture checks");
  conjecture->add_option("question", a.question)->required()->check(CLI::IsMember({"q2", "q3"}));
  conjecture->add_option("--p", a.p, "q2: p (with --check, the largest p)");
  conjecture->add_option("--e", a.e, "e (with --check, the largest e)");
  conjecture->add_option("--parity", a.parity, "q3: odd or even |S|")
      ->check(CLI::IsMember({"odd", "even"}));
  conjecture->add_flag("--check", a.check, "check the symmetry conjecture instead of listing");

  auto* table = app.add_subcommand("table", "square-board lower bounds by n");
  a.max = 0;
  table->add_option("max_n", a.max, "largest n")->check(CLI::Range(1, 10000));
  table->add_option("--format", a.format, "csv or ascii")->check(CLI::IsMember({"csv", "ascii"}));

  auto* figure = app.add_subcommand("figure", "board classification grid");
  figure->add_option("max_dim", a.max, "largest side")->check(CLI::Range(1, 2000));
  figure->add_option("--format", a.format, "csv or ascii")->check(CLI::IsMember({"csv", "ascii"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (bound->parsed()) return cmd_bound(bound, a, out);
    if (construct->parsed()) return cmd_construct(construct, a, out, err);
    if (verify->parsed()) return cmd_verify(a, out);
    if (search->parsed()) return cmd_search(search, a, out);
    if (conjecture->parsed()) return cmd_conjecture(conjecture, a, out);
    if (table->parsed()) {
      out << table_output(a.max > 0 ? a.max : 13, table_format(a.format));
      return kOk;
    }
    out << figure_output(a.max > 0 ? a.max : 18, table_format(a.format));
    return kOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace rqd::cli
