#include <atomic>
#include <cstddef>
#include <limits>

#include "beta_search.hpp"

namespace rqd::detail {

namespace {

void lower_to(std::atomic<std::size_t>& best, std::size_t i) {
  std::size_t cur = best.load();
  while (i < cur && !best.compare_exchange_weak(cur, i)) {
  }
}

}  // namespace

BetaDecision beta_decide_parallel(const BetaContext& ctx, int p, NodeBudget& budget) {
  const BoardDims dims = ctx.dims();
  budget.add(1);
  if (auto w = trivial_beta_witness(dims, p)) return {Outcome::Found, std::move(w)};

  const auto row_sets = subsets_of_size(dims.n, p);
  const auto col_sets = subsets_of_size(dims.m, p);
  const auto frontier = static_cast<long>(row_sets.size());

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{kNone};
  std::vector<LineMask> hit_cols(row_sets.size());
  std::uint64_t nodes = 0;

  // The serial scan returns the first feasible pair in (rows, cols) order;
  // here each row set finds its own first column set and the lowest row
  // index wins.
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : nodes)
  for (long i = 0; i < frontier; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx > best.load()) continue;
    NodeBudget local;
    for (LineMask cols : col_sets) {
      if (idx > best.load()) break;
      if (!ctx.canonical(row_sets[idx], cols)) continue;
      local.spend();
      if (ctx.solve_pair(row_sets[idx], cols, p, local, nullptr) == Outcome::Found) {
        hit_cols[idx] = cols;
        lower_to(best, idx);
        break;
      }
    }
    nodes += local.used();
  }
  budget.add(nodes);

  const std::size_t win = best.load();
  if (win == kNone) return {Outcome::Infeasible, std::nullopt};
  NodeBudget replay;
  DiagonalChoice choice;
  ctx.solve_pair(row_sets[win], hit_cols[win], p, replay, &choice);
  return {Outcome::Found, ctx.witness(row_sets[win], hit_cols[win], choice)};
}

}  // namespace rqd::detail
