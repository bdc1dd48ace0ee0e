#pragma once

#include <cstdint>
#include <vector>

#include "lcsgraph/node_store.hpp"
#include "lcsgraph/sequence.hpp"

namespace lcsg {

// Per-cell record of the all-embeddings graph. The adjacency list of a cell
// is every match of its own rank inside the cell's region, lower-left to
// upper-right. Each list is a contiguous excerpt of a contour list, so head
// and tail pointers suffice.
struct EmbeddingCell {
  std::int32_t rank = 0;
  NodeId head = kNoNode;
  NodeId tail = kNoNode;
};

// The companion of DistinctGraph whose paths from (i,j) spell every LCS
// embedding of A_i and B_j exactly once; the same text may repeat under
// different position lists. Node pool is independent of the distinct graph's
// (the next-links differ).
class EmbeddingGraph {
 public:
  static EmbeddingGraph build(Sequence a, Sequence b);

  const Sequence& seq_a() const noexcept { return a_; }
  const Sequence& seq_b() const noexcept { return b_; }
  int rows() const noexcept { return m_; }
  int cols() const noexcept { return n_; }

  std::int32_t rank(int i, int j) const {
    check(i, j);
    return cells_[idx(i, j)].rank;
  }

  const EmbeddingCell& cell(int i, int j) const {
    check(i, j);
    return cells_[idx(i, j)];
  }

  std::vector<MatchPoint> adjacency(int i, int j) const;

  NodeId adj_begin(int i, int j) const { return cell(i, j).head; }

  NodeId adj_next(int i, int j, NodeId cur) const {
    const EmbeddingCell& c = cell(i, j);
    if (cur == c.tail) return kNoNode;
    return store_.next(cur);
  }

  const NodeStore& store() const noexcept { return store_; }
  const MatchPoint& point(NodeId id) const { return store_.point(id); }

  std::uint64_t build_ops() const noexcept { return build_ops_; }

 private:
  EmbeddingGraph(Sequence a, Sequence b);

  std::size_t idx(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 1) +
           static_cast<std::size_t>(j);
  }

  void check(int i, int j) const {
    if (i < 0 || i > m_ || j < 0 || j > n_)
      throw std::out_of_range("cell index out of range");
  }

  Sequence a_;
  Sequence b_;
  int m_ = 0;
  int n_ = 0;
  NodeStore store_;
  std::vector<EmbeddingCell> cells_;
  std::uint64_t build_ops_ = 0;
};

}  // namespace lcsg
