#pragma once

#include <algorithm>
#include <tuple>

#include "rqd/board.hpp"

namespace rqd {

// A choice of sum diagonals and difference diagonals, identified by x+y and
// x-y respectively. Solution object for bishop covers and spaced grids.
struct DiagonalCover {
  IndexSet sums;
  IndexSet diffs;

  int size() const { return static_cast<int>(std::max(sums.size(), diffs.size())); }

  bool operator==(const DiagonalCover&) const = default;
  bool operator<(const DiagonalCover& o) const {
    return std::tie(sums, diffs) < std::tie(o.sums, o.diffs);
  }
};

}  // namespace rqd
