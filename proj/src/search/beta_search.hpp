#pragma once

// Relaxed queen search: rows and columns first, then the residual spaced
// grid goes to the diagonal kernel. Frontier = p-subsets of rows, in
// increasing mask order, each paired with every p-subset of columns.

#include <cstdint>
#include <optional>
#include <vector>

#include "diagonal_kernel.hpp"
#include "rqd/board.hpp"

namespace rqd::detail {

using LineMask = std::uint64_t;

// p-subsets of {0..width-1} as bitmasks, ascending.
std::vector<LineMask> subsets_of_size(int width, int size);
LineMask reverse_bits(LineMask mask, int width);

class BetaContext {
 public:
  BetaContext(BoardDims dims, bool symmetry);

  BoardDims dims() const { return dims_; }

  // True when (rows, cols) is lexicographically minimal among its images
  // under the board's reflections (and transpose on square boards), or
  // when symmetry reduction is off.
  bool canonical(LineMask rows, LineMask cols) const;

  // Cover the cells missed by `rows` and `cols` with p sum and p difference
  // lines.
  Outcome solve_pair(LineMask rows, LineMask cols, int p, NodeBudget& budget,
                     DiagonalChoice* choice) const;

  RelaxedCover witness(LineMask rows, LineMask cols, const DiagonalChoice& choice) const;

 private:
  BoardDims dims_;
  bool symmetry_;
  DiagonalInstance inst_;
  std::vector<CellSet> row_mask_, col_mask_;
  CellSet all_;
};

struct BetaDecision {
  Outcome outcome = Outcome::Infeasible;
  std::optional<RelaxedCover> witness;
};

// p >= min(m, n) is settled directly (all rows, else all columns).
std::optional<RelaxedCover> trivial_beta_witness(BoardDims dims, int p);

BetaDecision beta_decide_serial(const BetaContext& ctx, int p, NodeBudget& budget);
// Same outcome and witness as the serial scan. Ignores the budget limit but
// adds the nodes it visits.
BetaDecision beta_decide_parallel(const BetaContext& ctx, int p, NodeBudget& budget);

}  // namespace rqd::detail
