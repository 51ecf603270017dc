#pragma once

// Queen domination by branch and bound. At every node the lowest
// undominated cell must be attacked by a queen still to come, which is the
// branching set; queens refuted in earlier sibling branches are excluded.

#include <optional>
#include <vector>

#include "diagonal_kernel.hpp"
#include "rqd/board.hpp"

namespace rqd::detail {

class GammaContext {
 public:
  explicit GammaContext(BoardDims dims);

  BoardDims dims() const { return dims_; }
  int cell_count() const { return dims_.cell_count(); }
  const CellSet& attack(int cell) const { return attack_[cell]; }
  Cell cell_of(int index) const { return {index / dims_.n, index % dims_.n}; }

  // Place at most `queens` more queens, none of them in `excluded`.
  Outcome search(int queens, const CellSet& dominated, CellSet excluded, NodeBudget& budget,
                 std::vector<int>& placed) const;

  // Branching set at the root: cells attacking cell 0.
  std::vector<int> root_candidates() const;

 private:
  BoardDims dims_;
  std::vector<CellSet> attack_;  // queen cell -> dominated cells, itself included
  CellSet all_;
  int max_attack_ = 0;
};

struct GammaDecision {
  Outcome outcome = Outcome::Infeasible;
  std::vector<int> queens;
};

GammaDecision gamma_decide_serial(const GammaContext& ctx, int k, NodeBudget& budget);
// Same outcome and placement as the serial search; splits the root branches.
GammaDecision gamma_decide_parallel(const GammaContext& ctx, int k, NodeBudget& budget);

}  // namespace rqd::detail
