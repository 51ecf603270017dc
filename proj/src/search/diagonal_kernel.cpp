#include "diagonal_kernel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rqd::detail {

namespace {

// Assigns ids to distinct values in ascending order.
struct ValueIds {
  std::map<int, int> ids;
  void add(int v) { ids.emplace(v, 0); }
  void finish(std::vector<int>& values) {
    int next = 0;
    for (auto& [v, id] : ids) {
      id = next++;
      values.push_back(v);
    }
  }
};

}  // namespace

DiagonalInstance DiagonalInstance::for_board(BoardDims dims) {
  if (dims.cell_count() > CellSet::kCapacity)
    throw std::invalid_argument("board exceeds " + std::to_string(CellSet::kCapacity) + " cells");
  DiagonalInstance inst;
  inst.cell_count = dims.cell_count();
  const int sums = dims.m + dims.n - 1;
  inst.sum_line.resize(sums);
  inst.diff_line.resize(sums);
  for (int s = 0; s < sums; ++s) {
    inst.sum_value.push_back(s);
    inst.diff_value.push_back(s - (dims.n - 1));
  }
  for (int x = 0; x < dims.m; ++x) {
    for (int y = 0; y < dims.n; ++y) {
      const int cell = x * dims.n + y;
      const int sid = x + y, did = x - y + dims.n - 1;
      inst.cell_sum.push_back(sid);
      inst.cell_diff.push_back(did);
      inst.sum_line[sid].set(cell);
      inst.diff_line[did].set(cell);
    }
  }
  return inst;
}

DiagonalInstance DiagonalInstance::for_grid(const SpacedGrid& grid) {
  if (grid.cell_count() > CellSet::kCapacity)
    throw std::invalid_argument("grid exceeds " + std::to_string(CellSet::kCapacity) + " cells");
  ValueIds sums, diffs;
  for (int x : grid.cols())
    for (int y : grid.rows()) {
      sums.add(x + y);
      diffs.add(x - y);
    }
  DiagonalInstance inst;
  inst.cell_count = grid.cell_count();
  sums.finish(inst.sum_value);
  diffs.finish(inst.diff_value);
  inst.sum_line.resize(inst.sum_value.size());
  inst.diff_line.resize(inst.diff_value.size());
  for (int i = 0; i < grid.width(); ++i) {
    for (int j = 0; j < grid.height(); ++j) {
      const int cell = i * grid.height() + j;
      const Cell c = grid.cell_at(i, j);
      const int sid = sums.ids.at(c.x + c.y), did = diffs.ids.at(c.x - c.y);
      inst.cell_sum.push_back(sid);
      inst.cell_diff.push_back(did);
      inst.sum_line[sid].set(cell);
      inst.diff_line[did].set(cell);
    }
  }
  return inst;
}

namespace {

class DiagonalDfs {
 public:
  DiagonalDfs(const DiagonalInstance& inst, const CellSet& target, const CellSet& boundary,
              NodeBudget& budget)
      : inst_(inst), target_(target), boundary_(boundary), budget_(budget) {}

  Outcome run(const CellSet& covered, int sums_left, int diffs_left) {
    if (!budget_.spend()) return Outcome::Cutoff;
    const CellSet open = minus(target_, covered);
    if (open.empty()) return Outcome::Found;
    const CellSet open_boundary = open & boundary_;
    if (open_boundary.count() > 2 * (sums_left + diffs_left)) return Outcome::Infeasible;

    const int cell = open_boundary.empty() ? open.first() : open_boundary.first();
    if (sums_left > 0) {
      const int id = inst_.cell_sum[cell];
      sums_.push_back(id);
      const Outcome o = run(covered | inst_.sum_line[id], sums_left - 1, diffs_left);
      if (o != Outcome::Infeasible) return o;
      sums_.pop_back();
    }
    if (diffs_left > 0) {
      const int id = inst_.cell_diff[cell];
      diffs_.push_back(id);
      const Outcome o = run(covered | inst_.diff_line[id], sums_left, diffs_left - 1);
      if (o != Outcome::Infeasible) return o;
      diffs_.pop_back();
    }
    return Outcome::Infeasible;
  }

  std::vector<int> sums_, diffs_;

 private:
  const DiagonalInstance& inst_;
  const CellSet& target_;
  const CellSet& boundary_;
  NodeBudget& budget_;
};

}  // namespace

Outcome cover_with_diagonals(const DiagonalInstance& inst, const CellSet& target,
                             const CellSet& boundary, int sum_budget, int diff_budget,
                             NodeBudget& budget, DiagonalChoice* choice) {
  DiagonalDfs dfs(inst, target, boundary, budget);
  const Outcome o = dfs.run(CellSet{}, sum_budget, diff_budget);
  if (o == Outcome::Found && choice != nullptr) {
    choice->sum_ids = std::move(dfs.sums_);
    choice->diff_ids = std::move(dfs.diffs_);
  }
  return o;
}

}  // namespace rqd::detail
