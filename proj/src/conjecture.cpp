#include "rqd/conjecture.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace rqd {

namespace {

int mod(int v, int e) { return ((v % e) + e) % e; }

std::vector<char> residues(const std::vector<int>& coords, int e) {
  std::vector<char> in(e, 0);
  for (int v : coords) in[mod(v, e)] = 1;
  return in;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

// Three-valued row membership while rows are still being chosen: rows up to
// `last` are fixed, residue 0 is always present (it is the endpoint e).
enum class Tri { No, Yes, Unknown };

class Q2Search {
 public:
  Q2Search(int p, int e) : p_(p), e_(e) {}

  std::vector<GridSolution> run() {
    cols_ = {0};
    choose_cols(1);
    return std::move(out_);
  }

 private:
  void choose_cols(int lo) {
    if (static_cast<int>(cols_.size()) == p_) {
      cols_.push_back(e_);
      col_in_ = residues(cols_, e_);
      rows_ = {0};
      row_in_.assign(e_, 0);
      row_in_[0] = 1;
      choose_rows(1);
      cols_.pop_back();
      return;
    }
    const int remaining = p_ - static_cast<int>(cols_.size());
    for (int v = lo; v <= e_ - remaining; ++v) {
      cols_.push_back(v);
      choose_cols(v + 1);
      cols_.pop_back();
    }
  }

  Tri row_has(int residue) const {
    if (row_in_[residue]) return Tri::Yes;
    return residue > rows_.back() ? Tri::Unknown : Tri::No;
  }

  // False only when some cell in the newest row is certainly uncoverable.
  bool newest_row_viable() const {
    const int r = rows_.back();
    for (int c : cols_) {
      const int sum = mod(c + r, e_);
      const Tri a = col_in_[sum] ? row_has(sum) : Tri::No;
      const Tri b = col_in_[mod(c - r, e_)] ? row_has(mod(r - c, e_)) : Tri::No;
      if (a == Tri::No && b == Tri::No) return false;
    }
    return true;
  }

  void choose_rows(int lo) {
    if (static_cast<int>(rows_.size()) == p_) {
      rows_.push_back(e_);
      if (q2_condition(cols_, rows_, e_)) out_.push_back({cols_, rows_});
      rows_.pop_back();
      return;
    }
    const int remaining = p_ - static_cast<int>(rows_.size());
    for (int v = lo; v <= e_ - remaining; ++v) {
      rows_.push_back(v);
      row_in_[v] = 1;
      if (newest_row_viable()) choose_rows(v + 1);
      row_in_[v] = 0;
      rows_.pop_back();
    }
  }

  int p_, e_;
  std::vector<int> cols_, rows_;
  std::vector<char> col_in_, row_in_;
  std::vector<GridSolution> out_;
};

}  // namespace

bool q2_condition(const std::vector<int>& cols, const std::vector<int>& rows, int e) {
  const auto in_c = residues(cols, e), in_r = residues(rows, e);
  for (int c : cols) {
    for (int r : rows) {
      const int sum = mod(c + r, e);
      if (in_c[sum] && in_r[sum]) continue;
      if (in_c[mod(c - r, e)] && in_r[mod(r - c, e)]) continue;
      return false;
    }
  }
  return true;
}

std::vector<GridSolution> q2_solutions(int p, int e) {
  if (p < 2 || e < p) throw std::invalid_argument("q2 needs 2 <= p <= e");
  return Q2Search(p, e).run();
}

bool q3_condition(const std::vector<int>& s, int e) {
  const auto in = residues(s, e);
  for (int x : s)
    for (int y : s)
      if (!in[mod(x + y, e)] && !in[mod(x - y, e)]) return false;
  return true;
}

std::vector<SubsetSolution> q3_solutions(int e, std::optional<Parity> parity) {
  if (e < 1 || e > 24) throw std::invalid_argument("q3 needs 1 <= e <= 24");
  std::vector<SubsetSolution> out;
  std::vector<int> s;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << e); ++mask) {
    const bool odd = std::popcount(mask) % 2 == 1;
    if (parity && (*parity == Parity::Odd) != odd) continue;
    s.clear();
    for (int x = 0; x < e; ++x)
      if ((mask >> x) & 1U) s.push_back(x);
    if (q3_condition(s, e)) out.push_back({e, s});
  }
  return out;
}

ConjectureReport check_conjecture_q2(int p_max, int e_max) {
  ConjectureReport rep;
  rep.range = "2 <= p <= " + std::to_string(p_max) + ", p <= e <= " + std::to_string(e_max);
  for (int p = 2; p <= p_max; ++p) {
    for (int e = p; e <= e_max; ++e) {
      for (const GridSolution& sol : q2_solutions(p, e)) {
        ++rep.checked;
        const bool mirror = sol.cols == sol.rows;
        bool anti = true;
        for (int i = 0; i <= p; ++i) anti = anti && sol.cols[i] + sol.rows[p - i] == e;
        const bool ok = p % 2 == 1 ? (mirror && anti) : (mirror || anti);
        if (!ok)
          rep.violations.push_back("p=" + std::to_string(p) + " e=" + std::to_string(e) + " " +
                                   format_listing(sol) + (mirror ? "" : " [C'!=R']") +
                                   (anti ? "" : " [C'+rev(R')!=e]"));
      }
    }
  }
  return rep;
}

ConjectureReport check_conjecture_q3(int e_max) {
  ConjectureReport rep;
  rep.range = "1 <= e <= " + std::to_string(e_max);
  for (int e = 1; e <= e_max; ++e) {
    for (const SubsetSolution& sol : q3_solutions(e, Parity::Odd)) {
      ++rep.checked;
      std::vector<int> closed = sol.s;
      closed.push_back(e);
      const bool has_zero = !sol.s.empty() && sol.s.front() == 0;
      const bool symmetric = std::all_of(closed.begin(), closed.end(), [&](int v) {
        return std::binary_search(closed.begin(), closed.end(), e - v);
      });
      if (!has_zero || !symmetric)
        rep.violations.push_back("e=" + std::to_string(e) + " " + format_listing(sol) +
                                 (has_zero ? "" : " [0 missing]") +
                                 (symmetric ? "" : " [not symmetric]"));
    }
  }
  return rep;
}

std::string format_listing(const GridSolution& sol) {
  return "C':" + join(sol.cols) + "  R':" + join(sol.rows);
}

std::string format_listing(const SubsetSolution& sol) {
  std::vector<int> closed = sol.s;
  closed.push_back(sol.e);
  return "S u {e}: " + join(closed);
}

}  // namespace rqd
