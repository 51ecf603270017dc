#include "beta_search.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

#include "rqd/search.hpp"

namespace rqd::detail {

std::vector<LineMask> subsets_of_size(int width, int size) {
  std::vector<LineMask> out;
  if (size < 0 || size > width) return out;
  if (size == 0) return {0};
  const LineMask limit = width == 64 ? 0 : LineMask{1} << width;
  LineMask v = (size == 64) ? ~LineMask{0} : (LineMask{1} << size) - 1;
  while (true) {
    out.push_back(v);
    // Gosper's hack: next larger integer with the same popcount.
    const LineMask c = v & (~v + 1);
    const LineMask r = v + c;
    if (r == 0) break;
    v = (((r ^ v) >> 2) / c) | r;
    if (limit != 0 && v >= limit) break;
  }
  return out;
}

LineMask reverse_bits(LineMask mask, int width) {
  LineMask out = 0;
  for (int i = 0; i < width; ++i)
    if ((mask >> i) & 1U) out |= LineMask{1} << (width - 1 - i);
  return out;
}

BetaContext::BetaContext(BoardDims dims, bool symmetry)
    : dims_(dims), symmetry_(symmetry), inst_(DiagonalInstance::for_board(dims)) {
  row_mask_.resize(dims.n);
  col_mask_.resize(dims.m);
  for (int x = 0; x < dims.m; ++x)
    for (int y = 0; y < dims.n; ++y) {
      const int cell = x * dims.n + y;
      row_mask_[y].set(cell);
      col_mask_[x].set(cell);
      all_.set(cell);
    }
}

bool BetaContext::canonical(LineMask rows, LineMask cols) const {
  if (!symmetry_) return true;
  const auto key = std::make_pair(rows, cols);
  const LineMask rr = reverse_bits(rows, dims_.n), rc = reverse_bits(cols, dims_.m);
  const std::pair<LineMask, LineMask> images[] = {{rr, cols}, {rows, rc}, {rr, rc}};
  for (const auto& img : images)
    if (img < key) return false;
  if (dims_.m == dims_.n) {
    // Transpose swaps chosen rows and chosen columns.
    const std::pair<LineMask, LineMask> swapped[] = {
        {cols, rows}, {rc, rows}, {cols, rr}, {rc, rr}};
    for (const auto& img : swapped)
      if (img < key) return false;
  }
  return true;
}

Outcome BetaContext::solve_pair(LineMask rows, LineMask cols, int p, NodeBudget& budget,
                                DiagonalChoice* choice) const {
  CellSet target = all_;
  for (int y = 0; y < dims_.n; ++y)
    if ((rows >> y) & 1U) target.subtract(row_mask_[y]);
  for (int x = 0; x < dims_.m; ++x)
    if ((cols >> x) & 1U) target.subtract(col_mask_[x]);
  if (target.empty()) return Outcome::Found;

  const LineMask open_rows = ~rows & ((dims_.n == 64) ? ~LineMask{0} : (LineMask{1} << dims_.n) - 1);
  const LineMask open_cols = ~cols & ((dims_.m == 64) ? ~LineMask{0} : (LineMask{1} << dims_.m) - 1);
  const int b = std::countr_zero(open_rows), t = 63 - std::countl_zero(open_rows);
  const int l = std::countr_zero(open_cols), r = 63 - std::countl_zero(open_cols);
  const CellSet boundary = boundary_of(target, col_mask_[l], col_mask_[r], row_mask_[b], row_mask_[t]);
  // Every diagonal meets the hull boundary at most twice.
  if (boundary.count() > 4 * p) return Outcome::Infeasible;
  return cover_with_diagonals(inst_, target, boundary, p, p, budget, choice);
}

RelaxedCover BetaContext::witness(LineMask rows, LineMask cols, const DiagonalChoice& choice) const {
  IndexSet rs, cs, ss, ds;
  for (int y = 0; y < dims_.n; ++y)
    if ((rows >> y) & 1U) rs.insert(y);
  for (int x = 0; x < dims_.m; ++x)
    if ((cols >> x) & 1U) cs.insert(x);
  for (int id : choice.sum_ids) ss.insert(inst_.sum_value[id]);
  for (int id : choice.diff_ids) ds.insert(inst_.diff_value[id]);
  return RelaxedCover(dims_, rs, cs, ss, ds);
}

std::optional<RelaxedCover> trivial_beta_witness(BoardDims dims, int p) {
  IndexSet all;
  if (p >= dims.n) {
    for (int y = 0; y < dims.n; ++y) all.insert(y);
    return RelaxedCover(dims, all, {}, {}, {});
  }
  if (p >= dims.m) {
    for (int x = 0; x < dims.m; ++x) all.insert(x);
    return RelaxedCover(dims, {}, all, {}, {});
  }
  return std::nullopt;
}

BetaDecision beta_decide_serial(const BetaContext& ctx, int p, NodeBudget& budget) {
  const BoardDims dims = ctx.dims();
  if (!budget.spend()) return {Outcome::Cutoff, std::nullopt};
  if (auto w = trivial_beta_witness(dims, p)) return {Outcome::Found, std::move(w)};

  const auto row_sets = subsets_of_size(dims.n, p);
  const auto col_sets = subsets_of_size(dims.m, p);
  for (LineMask rows : row_sets) {
    for (LineMask cols : col_sets) {
      if (!ctx.canonical(rows, cols)) continue;
      if (!budget.spend()) return {Outcome::Cutoff, std::nullopt};
      DiagonalChoice choice;
      const Outcome o = ctx.solve_pair(rows, cols, p, budget, &choice);
      if (o == Outcome::Found) return {o, ctx.witness(rows, cols, choice)};
      if (o == Outcome::Cutoff) return {o, std::nullopt};
    }
  }
  return {Outcome::Infeasible, std::nullopt};
}

}  // namespace rqd::detail

namespace rqd {

SearchResult<RelaxedCover> beta_exact(int m, int n, const SearchOptions& opts) {
  const BoardDims dims = BoardDims::make(m, n);
  if (m > 64 || n > 64) throw std::invalid_argument("beta_exact supports sides up to 64");
  const int start = opts.start.value_or(1);
  if (start < 1) throw std::invalid_argument("search start must be positive");

  const detail::BetaContext ctx(dims, opts.symmetry);
  detail::NodeBudget budget(opts.cutoff.value_or(UINT64_MAX));
  const bool parallel = opts.parallel && !opts.cutoff;

  for (int p = start;; ++p) {
    detail::BetaDecision d = parallel ? detail::beta_decide_parallel(ctx, p, budget)
                                      : detail::beta_decide_serial(ctx, p, budget);
    if (d.outcome == detail::Outcome::Found)
      return {p, std::move(d.witness), budget.used(), SearchStatus::Optimal};
    if (d.outcome == detail::Outcome::Cutoff)
      return {p, std::nullopt, budget.used(), SearchStatus::CutoffReached};
  }
}

}  // namespace rqd
