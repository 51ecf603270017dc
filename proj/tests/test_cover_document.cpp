#include <doctest.h>

#include "generators.hpp"
#include "rqd/constructions.hpp"
#include "rqd/cover_document.hpp"

using namespace rqd;

TEST_CASE("canonical text") {
  const std::string text = emit(to_document(square_queen_cover(11)));
  CHECK(text ==
        "schema_version: 1\n"
        "kind: relaxed-queen\n"
        "m: 11\n"
        "n: 11\n"
        "rows: 6 7 8 9 10\n"
        "cols: 6 7 8 9 10\n"
        "sums: 1 3 5 7 9\n"
        "diffs: -4 -2 0 2 4\n");
  const std::string bishop = emit(to_document(BoardDims{2, 2}, bishop_cover(2, 2)));
  CHECK(bishop.find("rows:\n") != std::string::npos);
  CHECK(bishop.find("kind: bishop\n") != std::string::npos);
}

TEST_CASE("property: parse inverts emit") {
  test::Gen g(3);
  for (int t = 0; t < 300; ++t) {
    const BoardDims d{g.uniform(1, 30), g.uniform(1, 30)};
    const CoverDocument doc = to_document(g.relaxed_cover(d, 0.3));
    const std::string text = emit(doc);
    const CoverDocument back = parse_cover_document(text);
    REQUIRE(back == doc);
    REQUIRE(emit(back) == text);
  }
  for (int k = 0; k <= 4; ++k) {
    const CoverDocument doc = to_document(uniform_grid(k, 2), uniform_grid_Qe(k, k / 2, 2));
    REQUIRE(parse_cover_document(emit(doc)) == doc);
  }
}

TEST_CASE("parser tolerates comments, blank lines and field order") {
  const CoverDocument doc = parse_cover_document(
      "# hand written\n\nkind: bishop\nschema_version: 1\nn: 2\nm: 2\n"
      "diffs: 0\nsums: 1\nrows:\ncols:\n");
  CHECK(doc.kind == CoverKind::Bishop);
  CHECK(doc.sums == std::vector<int>{1});
  CHECK(as_diagonal_cover(doc) == bishop_cover(2, 2));
}

TEST_CASE("parse errors carry line and field") {
  const std::string good = emit(to_document(square_queen_cover(3)));
  const auto fails = [](const std::string& text, int line, const std::string& field) {
    try {
      parse_cover_document(text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.field() == field);
      return;
    }
    FAIL("expected a parse error");
  };
  fails("schema_version: 2\n", 1, "schema_version");
  fails("schema_version: 1\nkind: rook\n", 2, "kind");
  fails("schema_version: 1\nkind: bishop\nm: 3\nn: 3\nrows:\ncols:\nsums: 2 1\ndiffs:\n", 7,
        "sums");
  fails("schema_version: 1\nkind: bishop\nm: 3\nn: 3\nrows:\ncols:\nsums: 9\ndiffs:\n", 7,
        "sums");
  fails("schema_version: 1\nkind: bishop\nm: 3\nn: x\nrows:\ncols:\nsums:\ndiffs:\n", 4, "n");
  fails("schema_version: 1\nkind: bishop\nm: 3\nn: 3\nrows:\ncols:\nsums:\n", 0, "diffs");
  fails(good + "rows: 1\n", 9, "rows");
  fails(good + "colour: red\n", 9, "colour");
  fails("schema_version: 1\nkind: bishop\nm: 3\nn: 3\nrows: 1\ncols:\nsums:\ndiffs:\n", 5,
        "rows");
  fails("no colon here\n", 1, "");
}
