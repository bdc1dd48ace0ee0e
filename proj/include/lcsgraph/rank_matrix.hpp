#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lcsgraph/sequence.hpp"

namespace lcsg {

// The (m+1) x (n+1) grid of prefix LCS lengths: at(i,j) is the LCS length of
// A_i and B_j, the "rank" of cell [i,j]. Row and column 0 are all zero, and
// neighbouring entries differ by at most one.
class RankMatrix {
 public:
  RankMatrix() = default;

  int rows() const noexcept { return m_; }
  int cols() const noexcept { return n_; }

  std::int32_t at(int i, int j) const {
    check(i, j);
    return ranks_[idx(i, j)];
  }

 private:
  friend RankMatrix compute_ranks(const Sequence& a, const Sequence& b);

  RankMatrix(int m, int n)
      : m_(m),
        n_(n),
        ranks_(static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(n + 1), 0) {}

  std::size_t idx(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 1) +
           static_cast<std::size_t>(j);
  }

  void check(int i, int j) const {
    if (i < 0 || i > m_ || j < 0 || j > n_)
      throw std::out_of_range("rank matrix index out of range");
  }

  int m_ = 0;
  int n_ = 0;
  std::vector<std::int32_t> ranks_;
};

// Fills the grid row by row from the standard recurrence: diagonal + 1 on a
// match, max of up and left on a clash.
RankMatrix compute_ranks(const Sequence& a, const Sequence& b);

}  // namespace lcsg
