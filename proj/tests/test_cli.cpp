#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rqd/cli.hpp"
#include "rqd/constructions.hpp"

using namespace rqd;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = temp_path(name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("bound") {
  CHECK(run({"bound", "beta", "13", "9"}).out == "5\n");
  CHECK(run({"bound", "classify", "12", "10"}).out == "improved +1\n");
  CHECK(run({"bound", "alpha", "--m", "6", "--n", "6"}).out == "5\n");
  CHECK(run({"bound", "grid-lower", "9", "3"}).out == "6\n");
  CHECK(run({"bound", "gamma-lower", "8", "11"}).out == "5\n");
  CHECK(run({"bound", "beta", "0", "3"}).code == cli::kUsage);
  CHECK(run({"bound", "beta", "3"}).code == cli::kUsage);
  CHECK(run({"bound", "omega", "3", "3"}).code == cli::kUsage);
  CHECK(run({"bound", "beta", "3", "3", "--bogus"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("construct") {
  const Run q = run({"construct", "queen", "11", "11"});
  CHECK(q.code == cli::kOk);
  CHECK(q.out.find("rows: 6 7 8 9 10\n") != std::string::npos);
  CHECK(q.out.find("diffs: -4 -2 0 2 4\n") != std::string::npos);
  CHECK(run({"construct", "bishop", "6", "6"}).out.find("sums: 1 3 5 7 9\n") != std::string::npos);
  const Run qe = run({"construct", "qe", "--k", "4", "--e", "2", "--d", "2"});
  CHECK(qe.out.find("sums: -12 -8 -4 -2 0 2 4 8 12\n") != std::string::npos);
  CHECK(qe.out.find("diffs: -12 -8 -4 -2 0 2 4 8 12\n") != std::string::npos);
  CHECK(run({"construct", "qe", "--k", "1", "--e", "3"}).code == cli::kUsage);
  CHECK(run({"construct", "qe", "--k", "1"}).code == cli::kUsage);
  const Run ascii = run({"construct", "queen", "7", "7", "--format", "ascii"});
  CHECK(ascii.out == "#######\n#######\n#######\n++++###\n++++###\n++++###\n++++###\n");
}

TEST_CASE("construct then verify round-trips through a file") {
  const std::string path = temp_path("rqd_cli_q11.txt");
  CHECK(run({"construct", "queen", "11", "11", "--out", path}).out.empty());
  const Run v = run({"verify", path});
  CHECK(v.code == cli::kOk);
  CHECK(first_line(v.out) == "valid, size 5");
  CHECK(v.out.find("tight (e) corner diagonals balanced: yes") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("verify rejects bad documents") {
  const std::string empty = write_temp("rqd_cli_empty.txt",
                                       "schema_version: 1\nkind: relaxed-queen\nm: 2\nn: 2\n"
                                       "rows:\ncols:\nsums:\ndiffs:\n");
  const Run e = run({"verify", empty});
  CHECK(e.code == cli::kInvalid);
  CHECK(first_line(e.out) == "invalid, size 0: cell (0, 0) uncovered");

  std::string text = emit(to_document(square_queen_cover(11)));
  text.replace(text.find("sums: 1 "), 8, "sums: 0 ");
  const Run p = run({"verify", write_temp("rqd_cli_mut.txt", text)});
  CHECK(p.code == cli::kInvalid);
  CHECK(p.out.find("uncovered") != std::string::npos);

  const Run bad = run({"verify", write_temp("rqd_cli_bad.txt", "schema_version: 1\nkind: x\n")});
  CHECK(bad.code == cli::kInvalid);
  CHECK(bad.err.find("line 2, field 'kind'") != std::string::npos);
  CHECK(run({"verify", temp_path("rqd_cli_missing_file.txt")}).code == cli::kUsage);
  std::remove(empty.c_str());
}

TEST_CASE("search") {
  CHECK(first_line(run({"search", "gamma", "8", "11"}).out) == "6");
  const Run b = run({"search", "beta", "7", "7"});
  CHECK(first_line(b.out) == "3");
  CHECK(b.out.find("nodes: ") != std::string::npos);
  CHECK(b.out.find("kind: relaxed-queen") != std::string::npos);
  CHECK(first_line(run({"search", "grid", "--cols", "0,1,2", "--rows", "0,1,2"}).out) == "3");
  CHECK(first_line(run({"search", "alpha", "6", "6"}).out) == "5");
  CHECK(first_line(run({"search", "beta", "9", "9", "--parallel"}).out) == "5");
  const Run cut = run({"search", "beta", "12", "12", "--cutoff", "5"});
  CHECK(cut.code == cli::kCutoff);
  CHECK(cut.out.find("cutoff reached") != std::string::npos);
  CHECK(run({"search", "grid", "--cols", "0,1"}).code == cli::kUsage);
}

TEST_CASE("conjecture") {
  CHECK(run({"conjecture", "q2", "--p", "5", "--e", "8"}).out ==
        "C':0 1 2 6 7 8  R':0 1 2 6 7 8\nC':0 2 3 5 6 8  R':0 2 3 5 6 8\n");
  CHECK(run({"conjecture", "q3", "--e", "6", "--parity", "odd"}).out ==
        "S u {e}: 0 6\nS u {e}: 0 2 4 6\nS u {e}: 0 1 5 6\nS u {e}: 0 1 2 4 5 6\n");
  const Run c = run({"conjecture", "q3", "--e", "12", "--check"});
  CHECK(c.code == cli::kOk);
  CHECK(first_line(c.out) == "holds");
  CHECK(first_line(run({"conjecture", "q2", "--check"}).out) == "holds");
  CHECK(run({"conjecture", "q2", "--p", "5"}).code == cli::kUsage);
  CHECK(run({"conjecture", "q3", "--e", "6", "--parity", "both"}).code == cli::kUsage);
}

TEST_CASE("table") {
  const Run t = run({"table", "13"});
  CHECK(first_line(t.out) == "n,case,lb_1987,lb_1995,lb_2007,beta");
  CHECK(t.out.find("\n12,4k,6,6,6,6\n") != std::string::npos);
  CHECK(t.out.find("\n9,4k+1,4,5,5,5\n") != std::string::npos);
  CHECK(t.out.find("\n3,4k+3,1,1,1,1\n") != std::string::npos);
  CHECK(t.out.find("\n11,4k+3,5,5,5,5\n") != std::string::npos);
  CHECK(run({"table", "20"}).out.find("\n15,4k+3,7,7,8,7\n") != std::string::npos);
  CHECK(run({"table", "4", "--format", "ascii"}).out.find("beta") != std::string::npos);
  CHECK(run({"table", "20000"}).code == cli::kUsage);
}

TEST_CASE("figure") {
  const Run f = run({"figure", "18"});
  std::istringstream lines(f.out);
  std::string line;
  std::vector<std::vector<std::string>> grid;
  while (std::getline(lines, line)) {
    if (line.starts_with("#")) continue;
    std::vector<std::string> cells;
    std::istringstream cs(line);
    for (std::string c; std::getline(cs, c, ',');) cells.push_back(c);
    grid.push_back(cells);
  }
  REQUIRE(grid.size() == 19);
  CHECK(grid[12][10] == "+1");
  CHECK(grid[10][4] == "-1");
  CHECK(grid[9][9] == "S");
  CHECK(f.out.find("# improved fraction among non-trivial non-square boards: ") !=
        std::string::npos);

  const Run small = run({"figure", "3", "--format", "ascii"});
  CHECK(small.out.find("+1") == std::string::npos);
  CHECK(small.out.find(" S") == std::string::npos);
}

TEST_CASE("figure statistic and board rendering helpers") {
  const cli::FigureStats s = cli::figure_stats(200);
  CHECK(s.fraction() > 0.115);
  CHECK(s.fraction() < 0.135);
  CHECK(cli::render_board(RelaxedCover({3, 2}, {}, {}, {}, {})) == "...\n...\n");
  CHECK(cli::render_board(RelaxedCover({3, 2}, {1}, {}, {0}, {})) == "###\n+..\n");
}
