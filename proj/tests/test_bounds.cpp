#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "rqd/bounds.hpp"

using namespace rqd;

TEST_CASE("beta on square boards") {
  CHECK(beta_square(4) == 2);
  CHECK(beta_square(9) == 5);
  CHECK(beta_square(11) == 5);
  CHECK(beta_square(1) == 1);
  CHECK(beta_square(12) == 6);
  CHECK(beta_square(3) == 1);
}

TEST_CASE("beta on rectangular boards") {
  CHECK(beta_rect(13, 9) == 5);
  CHECK(beta_rect(12, 10) == 6);
  CHECK(beta_rect(10, 4) == 4);
  CHECK(beta_rect(9, 9) == 5);
  CHECK(gamma_lower(8, 11) == 5);
  CHECK(gamma_lower(1, 1) == 1);
}

TEST_CASE("alpha closed forms") {
  CHECK(alpha_square(6) == 5);
  CHECK(alpha_square(7) == 7);
  CHECK(alpha_square(1) == 1);
  CHECK(alpha_rect(3, 3) == 3);
  CHECK(alpha_rect(4, 4) == 3);
  CHECK(alpha_rect(2, 2) == 1);
  CHECK(spaced_grid_diag_lower(9, 3) == 6);
  CHECK(spaced_grid_diag_lower(2, 2) == 1);
  CHECK(spaced_grid_diag_lower(3, 3) == 3);
}

TEST_CASE("classification examples") {
  CHECK(classify_board(10, 4).tag == BoardTag::Trivial);
  CHECK(classify_board(12, 10).tag == BoardTag::Improved);
  CHECK(classify_board(11, 18).tag == BoardTag::Matched);
  CHECK(classify_board(11, 11).tag == BoardTag::Matched);
  CHECK(classify_board(9, 9).tag == BoardTag::SquareKnown);
  CHECK(classify_board(12, 10).value == 6);
  CHECK(to_string(BoardTag::Improved) == "improved");
  CHECK(marker(BoardTag::Trivial) == "-1");
}

TEST_CASE("non-positive arguments throw") {
  CHECK_THROWS_AS(beta_rect(0, 3), std::out_of_range);
  CHECK_THROWS_AS(alpha_square(-1), std::out_of_range);
  CHECK_THROWS_AS(classify_board(3, 0), std::out_of_range);
}

TEST_CASE("property: symmetry, square agreement and class consistency") {
  for (int m = 1; m <= 60; ++m) {
    CHECK(beta_rect(m, m) == beta_square(m));
    CHECK(alpha_rect(m, m) == alpha_square(m));
    for (int n = 1; n <= 60; ++n) {
      REQUIRE(beta_rect(m, n) == beta_rect(n, m));
      REQUIRE(alpha_rect(m, n) == alpha_rect(n, m));
      REQUIRE(classify_board(m, n) == classify_board(n, m));
      REQUIRE(beta_rect(m, n) <= std::min(m, n));
      // Hard and easy critical partition the critical boards.
      REQUIRE(is_critical_board(m, n) ==
              (is_hard_critical_board(m, n) || is_easy_critical_board(m, n)));
      REQUIRE_FALSE((is_hard_critical_board(m, n) && is_easy_critical_board(m, n)));
      if (!is_trivial_board(m, n)) {
        // Either the ceiling of (m+n-2)/4 or one above it.
        const int base = (m + n - 2 + 3) / 4;
        REQUIRE((beta_rect(m, n) == base ||
                 (is_hard_critical_board(m, n) && beta_rect(m, n) == base + 1)));
      }
    }
  }
}

TEST_CASE("property: beta grows by at most one per added line") {
  for (int m = 1; m <= 40; ++m)
    for (int n = 1; n <= 40; ++n) {
      REQUIRE(beta_rect(m + 1, n) >= beta_rect(m, n));
      REQUIRE(beta_rect(m + 1, n) <= beta_rect(m, n) + 1);
    }
}
