#include "gamma_search.hpp"

#include <algorithm>
#include <stdexcept>

#include "rqd/bounds.hpp"
#include "rqd/search.hpp"

namespace rqd::detail {

GammaContext::GammaContext(BoardDims dims) : dims_(dims) {
  if (dims.cell_count() > CellSet::kCapacity)
    throw std::invalid_argument("board exceeds " + std::to_string(CellSet::kCapacity) + " cells");
  const int cells = dims.cell_count();
  attack_.resize(cells);
  for (int q = 0; q < cells; ++q) {
    const Cell a = cell_of(q);
    for (int c = 0; c < cells; ++c) {
      const Cell b = cell_of(c);
      if (a.x == b.x || a.y == b.y || a.x + a.y == b.x + b.y || a.x - a.y == b.x - b.y)
        attack_[q].set(c);
    }
    all_.set(q);
    max_attack_ = std::max(max_attack_, attack_[q].count());
  }
}

Outcome GammaContext::search(int queens, const CellSet& dominated, CellSet excluded,
                             NodeBudget& budget, std::vector<int>& placed) const {
  if (!budget.spend()) return Outcome::Cutoff;
  const CellSet open = minus(all_, dominated);
  if (open.empty()) return Outcome::Found;
  if (queens == 0 || open.count() > queens * max_attack_) return Outcome::Infeasible;

  // Some queen attacks the lowest open cell. A candidate that failed is
  // excluded from its later siblings.
  const CellSet candidates = minus(attack_[open.first()], excluded);
  Outcome result = Outcome::Infeasible;
  candidates.for_each([&](int q) {
    if (result != Outcome::Infeasible) return;
    placed.push_back(q);
    result = search(queens - 1, dominated | attack_[q], excluded, budget, placed);
    if (result != Outcome::Infeasible) return;
    placed.pop_back();
    excluded.set(q);
  });
  return result;
}

std::vector<int> GammaContext::root_candidates() const {
  std::vector<int> out;
  attack_[0].for_each([&](int q) { out.push_back(q); });
  return out;
}

GammaDecision gamma_decide_serial(const GammaContext& ctx, int k, NodeBudget& budget) {
  GammaDecision d;
  d.outcome = ctx.search(k, CellSet{}, CellSet{}, budget, d.queens);
  if (d.outcome != Outcome::Found) d.queens.clear();
  return d;
}

}  // namespace rqd::detail

namespace rqd {

SearchResult<QueenPlacement> gamma_exact(int m, int n, const SearchOptions& opts) {
  const BoardDims dims = BoardDims::make(m, n);
  const int start = opts.start.value_or(gamma_lower(m, n));
  if (start < 1) throw std::invalid_argument("search start must be positive");

  const detail::GammaContext ctx(dims);
  detail::NodeBudget budget(opts.cutoff.value_or(UINT64_MAX));
  const bool parallel = opts.parallel && !opts.cutoff;

  for (int k = start;; ++k) {
    const detail::GammaDecision d = parallel ? detail::gamma_decide_parallel(ctx, k, budget)
                                             : detail::gamma_decide_serial(ctx, k, budget);
    if (d.outcome == detail::Outcome::Cutoff)
      return {k, std::nullopt, budget.used(), SearchStatus::CutoffReached};
    if (d.outcome == detail::Outcome::Found) {
      std::set<Cell> queens;
      for (int q : d.queens) queens.insert(ctx.cell_of(q));
      return {k, QueenPlacement::make(dims, std::move(queens)), budget.used(),
              SearchStatus::Optimal};
    }
  }
}

}  // namespace rqd
