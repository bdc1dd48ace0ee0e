#pragma once

#include <cstdint>
#include <vector>

#include "lcsgraph/node_store.hpp"
#include "lcsgraph/sequence.hpp"

namespace lcsg {

// Per-cell record of the distinct-LCS graph. The adjacency list of a cell is
// the matches of its own rank that are antidominant within the cell's
// region, lower-left to upper-right. `tail` is always the last list node
// (kNoNode exactly when the rank is 0). Any other nodes form an ordinary
// linked chain from `head` to `pretail`; the hop from `pretail` to `tail`
// lives in this record, NOT in pretail's stored next-link, which may serve a
// different cell.
struct DistinctCell {
  std::int32_t rank = 0;
  NodeId head = kNoNode;
  NodeId pretail = kNoNode;
  NodeId tail = kNoNode;
};

// The prefix-closed DAG whose paths from cell (i,j), augmented with a
// diagonal step out of every match taken, spell each distinct LCS of A_i and
// B_j exactly once (tracing its largest-positions embedding). Built in one
// row-by-row pass with O(1) work per cell; adjacency lists of different
// cells share storage through the node pool.
class DistinctGraph {
 public:
  static DistinctGraph build(Sequence a, Sequence b);

  const Sequence& seq_a() const noexcept { return a_; }
  const Sequence& seq_b() const noexcept { return b_; }
  int rows() const noexcept { return m_; }
  int cols() const noexcept { return n_; }

  std::int32_t rank(int i, int j) const {
    check(i, j);
    return cells_[idx(i, j)].rank;
  }

  const DistinctCell& cell(int i, int j) const {
    check(i, j);
    return cells_[idx(i, j)];
  }

  // Materialized adjacency list of (i,j): empty iff rank(i,j) == 0.
  std::vector<MatchPoint> adjacency(int i, int j) const;

  // O(1) cursor over the same list; adj_begin yields kNoNode iff rank 0.
  NodeId adj_begin(int i, int j) const {
    const DistinctCell& c = cell(i, j);
    if (c.tail == kNoNode) return kNoNode;
    return c.head != kNoNode ? c.head : c.tail;
  }

  NodeId adj_next(int i, int j, NodeId cur) const {
    const DistinctCell& c = cell(i, j);
    if (cur == c.tail) return kNoNode;
    if (cur == c.pretail) return c.tail;
    return store_.next(cur);
  }

  const NodeStore& store() const noexcept { return store_; }
  const MatchPoint& point(NodeId id) const { return store_.point(id); }

  // Elementary construction steps (assignments + comparisons), for the
  // constant-work-per-cell guarantee.
  std::uint64_t build_ops() const noexcept { return build_ops_; }

 private:
  DistinctGraph(Sequence a, Sequence b);

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
  std::vector<DistinctCell> cells_;
  std::uint64_t build_ops_ = 0;
};

}  // namespace lcsg
