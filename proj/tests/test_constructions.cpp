#include <doctest.h>

#include "oracles.hpp"
#include "rqd/bounds.hpp"
#include "rqd/constructions.hpp"
#include "rqd/verify.hpp"

using namespace rqd;

TEST_CASE("bishop cover examples") {
  const DiagonalCover six = bishop_cover(6, 6);
  CHECK(six.sums == IndexSet{1, 3, 5, 7, 9});
  CHECK(six.diffs == IndexSet{-4, -2, 0, 2, 4});
  CHECK(bishop_cover(2, 2) == DiagonalCover{{1}, {0}});
  const DiagonalCover three = bishop_cover(3, 3);
  CHECK(three.size() == 3);
  CHECK(is_diagonal_cover(SpacedGrid::consecutive(3, 3), three));
  CHECK(three == restrict_cover(bishop_cover(4, 4), {4, 4}, {3, 3}));
}

TEST_CASE("square queen cover examples") {
  const RelaxedCover eleven = square_queen_cover(11);
  CHECK(eleven.size() == 5);
  CHECK(uncovered_grid(eleven.dims(), eleven.rows(), eleven.cols()) ==
        SpacedGrid::consecutive(6, 6));
  const RelaxedCover twelve = square_queen_cover(12);
  CHECK(twelve.size() == 6);
  // The 6 x 6 remainder of the 12-board only needs 5 diagonals per family.
  CHECK(twelve.sums().size() == 5);
  CHECK(twelve.diffs().size() == 5);
  const RelaxedCover one = square_queen_cover(1);
  CHECK(one.rows() == IndexSet{0});
  CHECK(one.size() == 1);
}

TEST_CASE("rectangular queen cover examples") {
  const RelaxedCover c139 = rect_queen_cover(13, 9);
  CHECK(c139.rows().size() == 5);
  CHECK(c139.cols().size() == 5);
  CHECK(c139.sums().size() == 5);
  CHECK(c139.diffs().size() == 5);
  CHECK(is_relaxed_cover(c139));

  const RelaxedCover c104 = rect_queen_cover(10, 4);
  CHECK(c104.rows() == IndexSet{0, 1, 2, 3});
  CHECK(c104.cols().empty());
  CHECK(c104.sums().empty());

  const RelaxedCover c1210 = rect_queen_cover(12, 10);
  CHECK(c1210.size() == 6);
  CHECK(is_relaxed_cover(c1210));
  CHECK(c1210 == restrict_cover(rect_queen_cover(14, 12), {12, 10}));
}

TEST_CASE("critical embedding") {
  CHECK(critical_embedding(12, 10) == std::pair{14, 12});
  CHECK(critical_embedding(13, 9) == std::pair{13, 9});
  const auto [m, n] = critical_embedding(11, 10);
  CHECK((m + n == 22 || m + n == 26));
  CHECK(beta_rect(m, n) == 5);
  CHECK_THROWS_AS(critical_embedding(10, 4), std::invalid_argument);
}

TEST_CASE("property: embeddings are easy critical, larger and keep beta") {
  for (int m = 1; m <= 80; ++m)
    for (int n = 1; n <= 80; ++n) {
      if (is_trivial_board(m, n)) continue;
      const auto [bm, bn] = critical_embedding(m, n);
      REQUIRE(bm >= m);
      REQUIRE(bn >= n);
      REQUIRE(bm + bn - m - n <= 4);
      REQUIRE(is_easy_critical_board(bm, bn));
      REQUIRE_FALSE(is_trivial_board(bm, bn));
      REQUIRE(beta_rect(bm, bn) == beta_rect(m, n));
    }
}

TEST_CASE("restriction") {
  const DiagonalCover four = bishop_cover(4, 4);
  CHECK(restrict_cover(four, {4, 4}, {4, 4}) == four);
  const RelaxedCover q = square_queen_cover(9);
  CHECK(restrict_cover(q, {9, 9}) == q);
  CHECK_THROWS_AS(restrict_cover(q, {10, 9}), std::out_of_range);
  const RelaxedCover big = rect_queen_cover(14, 12);
  const RelaxedCover small = restrict_cover(big, {12, 10});
  CHECK(small.size() == 6);
  CHECK(is_relaxed_cover(small));
}

TEST_CASE("Q_e sets") {
  CHECK(qe_set(4, 2, 2) == IndexSet{-12, -8, -4, -2, 0, 2, 4, 8, 12});
  CHECK(qe_set(1, 1, 2) == IndexSet{-2, 0, 2});
  CHECK(qe_set(1, 0, 2) == IndexSet{-4, 0, 4});
  CHECK_THROWS_AS(qe_set(1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(qe_set(1, 0, 3), std::invalid_argument);
  CHECK(uniform_grid(1, 2) == SpacedGrid({-3, -1, 1, 3}, {-3, -1, 1, 3}));
}

TEST_CASE("property: every Q_e is a perfect cover of its uniform grid") {
  for (int k = 0; k <= 8; ++k)
    for (int e = 0; e <= k; ++e)
      for (int d : {2, 4, 6}) {
        const IndexSet q = qe_set(k, e, d);
        REQUIRE(static_cast<int>(q.size()) == 2 * k + 1);
        const SpacedGrid g = uniform_grid(k, d);
        REQUIRE(test::naive_grid_cover(g.cols(), g.rows(), q, q));
        REQUIRE(is_perfect_cover(g, uniform_grid_Qe(k, e, d)));
      }
}

TEST_CASE("property: constructions verify with their closed-form size") {
  for (int m = 1; m <= 40; ++m)
    for (int n = 1; n <= 40; ++n) {
      const RelaxedCover q = rect_queen_cover(m, n);
      REQUIRE(q.dims() == BoardDims{m, n});
      REQUIRE(q.size() == beta_rect(m, n));
      REQUIRE(test::naive_is_cover(q));
      const DiagonalCover b = bishop_cover(m, n);
      REQUIRE(b.size() == alpha_rect(m, n));
      REQUIRE(test::naive_grid_cover(test::iota_vec(0, m - 1), test::iota_vec(0, n - 1), b.sums,
                                     b.diffs));
    }
  for (int n = 1; n <= 60; ++n) {
    const RelaxedCover s = square_queen_cover(n);
    REQUIRE(s.size() == beta_square(n));
    REQUIRE(test::naive_is_cover(s));
  }
}
