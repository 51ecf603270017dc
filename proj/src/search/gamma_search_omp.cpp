#include <atomic>
#include <cstddef>
#include <limits>

#include "gamma_search.hpp"

namespace rqd::detail {

namespace {

// Root branch i runs with branches 0..i-1 excluded, as in the serial order.
CellSet earlier(const std::vector<int>& roots, std::size_t i) {
  CellSet s;
  for (std::size_t j = 0; j < i; ++j) s.set(roots[j]);
  return s;
}

}  // namespace

GammaDecision gamma_decide_parallel(const GammaContext& ctx, int k, NodeBudget& budget) {
  budget.add(1);  // root node, as in the serial search
  if (k == 0) return {Outcome::Infeasible, {}};

  const std::vector<int> roots = ctx.root_candidates();
  const auto frontier = static_cast<long>(roots.size());
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{kNone};
  std::uint64_t nodes = 0;

#pragma omp parallel for schedule(dynamic, 1) reduction(+ : nodes)
  for (long i = 0; i < frontier; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx > best.load()) continue;
    NodeBudget local;
    std::vector<int> placed{roots[idx]};
    const Outcome o = ctx.search(k - 1, ctx.attack(roots[idx]), earlier(roots, idx), local, placed);
    nodes += local.used();
    if (o == Outcome::Found) {
      std::size_t cur = best.load();
      while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
      }
    }
  }
  budget.add(nodes);

  const std::size_t win = best.load();
  if (win == kNone) return {Outcome::Infeasible, {}};
  // Replay the winning branch serially for its deterministic placement.
  GammaDecision d{Outcome::Found, {roots[win]}};
  NodeBudget replay;
  ctx.search(k - 1, ctx.attack(roots[win]), earlier(roots, win), replay, d.queens);
  return d;
}

}  // namespace rqd::detail
