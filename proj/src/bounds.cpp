#include "rqd/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace rqd {

namespace {

void require_positive(int m, int n) {
  if (m < 1 || n < 1)
    throw std::out_of_range("dimensions must be positive, got " + std::to_string(m) + "x" +
                            std::to_string(n));
}

// ceil(v / 4) and ceil(v / 2) for v >= 0.
int ceil_div(int v, int d) { return (v + d - 1) / d; }

}  // namespace

bool is_trivial_board(int m, int n) {
  require_positive(m, n);
  return std::max(m, n) >= 3 * std::min(m, n) - 2;
}

bool is_critical_board(int m, int n) {
  require_positive(m, n);
  return (m + n) % 4 == 2;
}

bool is_hard_critical_board(int m, int n) {
  require_positive(m, n);
  const int s = m + n;
  if (m % 2 == 0 && n % 2 == 0) return s % 8 == 6;
  if (m % 2 == 1 && n % 2 == 1) return s % 8 == 2;
  return false;
}

bool is_easy_critical_board(int m, int n) {
  return is_critical_board(m, n) && !is_hard_critical_board(m, n);
}

int beta_square(int n) {
  require_positive(n, n);
  const int k = n / 4;
  return n % 4 == 0 ? 2 * k : 2 * k + 1;
}

int beta_rect(int m, int n) {
  if (is_trivial_board(m, n)) return std::min(m, n);
  const int s = m + n - 2;
  if (is_hard_critical_board(m, n)) return s / 4 + 1;  // s divisible by 4 here
  return ceil_div(s, 4);
}

int alpha_square(int n) {
  require_positive(n, n);
  return n % 2 == 0 ? n - 1 : n;
}

int alpha_rect(int m, int n) { return spaced_grid_diag_lower(m, n); }

int gamma_lower(int m, int n) { return beta_rect(m, n); }

int spaced_grid_diag_lower(int a, int b) {
  require_positive(a, b);
  const int s = a + b - 2;
  if (a % 2 == 1 && b % 2 == 1) return s / 2 + 1;
  return ceil_div(s, 2);
}

BoardClass classify_board(int m, int n) {
  const int value = beta_rect(m, n);
  if (is_trivial_board(m, n)) return {BoardTag::Trivial, value};
  if (is_hard_critical_board(m, n))
    return {m == n ? BoardTag::SquareKnown : BoardTag::Improved, value};
  return {BoardTag::Matched, value};
}

std::string to_string(BoardTag tag) {
  switch (tag) {
    case BoardTag::Trivial: return "trivial";
    case BoardTag::Improved: return "improved";
    case BoardTag::Matched: return "matched";
    case BoardTag::SquareKnown: return "square-known";
  }
  return "?";
}

std::string marker(BoardTag tag) {
  switch (tag) {
    case BoardTag::Trivial: return "-1";
    case BoardTag::Improved: return "+1";
    case BoardTag::Matched: return "0";
    case BoardTag::SquareKnown: return "S";
  }
  return "?";
}

}  // namespace rqd
