#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "rqd/conjecture.hpp"

using namespace rqd;

namespace {

std::vector<std::string> listings(const std::vector<GridSolution>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(format_listing(s));
  return out;
}

std::vector<std::string> listings(const std::vector<SubsetSolution>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(format_listing(s));
  return out;
}

}  // namespace

TEST_CASE("q2 listings for p=5, e=8") {
  CHECK(listings(q2_solutions(5, 8)) == std::vector<std::string>{
                                            "C':0 1 2 6 7 8  R':0 1 2 6 7 8",
                                            "C':0 2 3 5 6 8  R':0 2 3 5 6 8",
                                        });
}

TEST_CASE("q2 listings for p=4, e=6") {
  CHECK(listings(q2_solutions(4, 6)) == std::vector<std::string>{
                                            "C':0 1 2 5 6  R':0 1 2 5 6",
                                            "C':0 1 2 5 6  R':0 1 4 5 6",
                                            "C':0 1 3 4 6  R':0 1 3 4 6",
                                            "C':0 1 3 4 6  R':0 2 3 5 6",
                                            "C':0 1 4 5 6  R':0 1 2 5 6",
                                            "C':0 1 4 5 6  R':0 1 4 5 6",
                                            "C':0 2 3 5 6  R':0 1 3 4 6",
                                            "C':0 2 3 5 6  R':0 2 3 5 6",
                                        });
}

TEST_CASE("q2 smallest case and argument checks") {
  const auto sols = q2_solutions(2, 2);
  CHECK(std::find(sols.begin(), sols.end(), GridSolution{{0, 1, 2}, {0, 1, 2}}) != sols.end());
  CHECK_THROWS_AS(q2_solutions(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(q2_solutions(5, 4), std::invalid_argument);
}

TEST_CASE("q3 listings for e=6") {
  CHECK(listings(q3_solutions(6, Parity::Odd)) == std::vector<std::string>{
                                                      "S u {e}: 0 6",
                                                      "S u {e}: 0 2 4 6",
                                                      "S u {e}: 0 1 5 6",
                                                      "S u {e}: 0 1 2 4 5 6",
                                                  });
  CHECK(listings(q3_solutions(6, Parity::Even)) == std::vector<std::string>{
                                                       "S u {e}: 6",
                                                       "S u {e}: 0 1 6",
                                                       "S u {e}: 0 2 6",
                                                       "S u {e}: 0 3 6",
                                                       "S u {e}: 0 4 6",
                                                       "S u {e}: 2 4 6",
                                                       "S u {e}: 0 1 3 4 6",
                                                       "S u {e}: 0 5 6",
                                                       "S u {e}: 0 1 2 5 6",
                                                       "S u {e}: 0 2 3 5 6",
                                                       "S u {e}: 0 1 4 5 6",
                                                       "S u {e}: 1 2 4 5 6",
                                                       "S u {e}: 0 1 2 3 4 5 6",
                                                   });
}

TEST_CASE("q3 for e=1") {
  const auto all = q3_solutions(1);
  REQUIRE(all.size() == 2);
  CHECK(all[0].s.empty());
  CHECK(all[1].s == std::vector<int>{0});
  CHECK_THROWS_AS(q3_solutions(0), std::invalid_argument);
}

TEST_CASE("oracle: q2 solutions against exhaustive enumeration") {
  for (int p = 2; p <= 4; ++p)
    for (int e = p; e <= 9; ++e) {
      CAPTURE(p);
      CAPTURE(e);
      CHECK(q2_solutions(p, e) == test::naive_q2(p, e));
    }
}

TEST_CASE("oracle: q3 solutions against exhaustive enumeration") {
  for (int e = 1; e <= 12; ++e) {
    std::set<IndexSet> want;
    for (const IndexSet& s : test::naive_q3(e)) want.insert(s);
    std::set<IndexSet> got;
    for (const auto& sol : q3_solutions(e)) got.insert(IndexSet(sol.s.begin(), sol.s.end()));
    CHECK(got == want);
    CHECK(q3_solutions(e, Parity::Odd).size() + q3_solutions(e, Parity::Even).size() ==
          want.size());
  }
}

TEST_CASE("property: q3 solutions are closed under x -> -x mod e") {
  for (int e = 1; e <= 14; ++e)
    for (const auto& sol : q3_solutions(e)) {
      IndexSet neg;
      for (int x : sol.s) neg.insert(test::pmod(-x, e));
      REQUIRE(test::naive_q3_ok(neg, e));
    }
}

TEST_CASE("property: q2 solutions are closed under reversal") {
  for (int p = 2; p <= 5; ++p)
    for (int e = p; e <= 9; ++e) {
      const auto sols = q2_solutions(p, e);
      const std::set<GridSolution> all(sols.begin(), sols.end());
      for (const auto& s : sols) {
        // Reflect both axes: v -> e - v.
        GridSolution r;
        for (auto it = s.cols.rbegin(); it != s.cols.rend(); ++it) r.cols.push_back(e - *it);
        for (auto it = s.rows.rbegin(); it != s.rows.rend(); ++it) r.rows.push_back(e - *it);
        REQUIRE(all.contains(r));
        // Transpose.
        REQUIRE(all.contains(GridSolution{s.rows, s.cols}));
      }
    }
}

TEST_CASE("conjecture checks") {
  CHECK(check_conjecture_q2(5, 10).holds());
  CHECK(check_conjecture_q2(4, 6).holds());
  CHECK(check_conjecture_q2(2, 2).holds());
  CHECK(check_conjecture_q3(6).holds());
  CHECK(check_conjecture_q3(12).holds());
  CHECK(check_conjecture_q3(1).holds());
  CHECK(check_conjecture_q3(12).checked > 0);
}
