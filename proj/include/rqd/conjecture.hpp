#pragma once

// Enumerators for two questions about spaced grids with no obviously
// uncoverable cell, and checkers for the symmetry conjectures about them.
//
// Residues are taken mod e and tested against the coordinate set reduced
// mod e, so the endpoints 0 and e are the same residue.

#include <optional>
#include <string>
#include <vector>

namespace rqd {

// Columns 0 = C_0 < ... < C_p = e and rows 0 = R_0 < ... < R_p = e.
struct GridSolution {
  std::vector<int> cols;
  std::vector<int> rows;

  auto operator<=>(const GridSolution&) const = default;
};

// S, a subset of {0, ..., e-1}, ascending.
struct SubsetSolution {
  int e = 0;
  std::vector<int> s;

  bool operator==(const SubsetSolution&) const = default;
};

enum class Parity { Odd, Even };

struct ConjectureReport {
  std::string range;                    // e.g. "p <= 5, e <= 10"
  std::vector<std::string> violations;  // one line per counterexample
  std::size_t checked = 0;              // solutions examined

  bool holds() const { return violations.empty(); }
};

// Every (i, j) needs (C_i + R_j) mod e in C and R, or both
// (C_i - R_j) mod e in C and (R_j - C_i) mod e in R.
bool q2_condition(const std::vector<int>& cols, const std::vector<int>& rows, int e);

// All solutions in lexicographic (cols, rows) order. Throws
// std::invalid_argument unless 2 <= p <= e.
std::vector<GridSolution> q2_solutions(int p, int e);

// For all x, y in S: (x + y) mod e in S or (x - y) mod e in S.
bool q3_condition(const std::vector<int>& s, int e);

// All closed subsets, ordered by bitmask value (sum of 2^x). Throws
// std::invalid_argument unless 1 <= e <= 24.
std::vector<SubsetSolution> q3_solutions(int e, std::optional<Parity> parity = std::nullopt);

// Odd p: every solution has C_i = R_i and C_i + R_{p-i} = e for all i.
// Even p: every solution has at least one of the two.
ConjectureReport check_conjecture_q2(int p_max, int e_max);

// Every odd-sized q3 solution contains 0 and S + {e} is symmetric about e/2.
ConjectureReport check_conjecture_q3(int e_max);

// "C':0 1 2 6 7 8  R':0 1 2 6 7 8"
std::string format_listing(const GridSolution& sol);
// "S u {e}: 0 1 5 6" (S with e appended).
std::string format_listing(const SubsetSolution& sol);

}  // namespace rqd
