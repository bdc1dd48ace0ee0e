#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "lcsgraph/sequence.hpp"

namespace lcsg {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

// One pooled record per match cell. `next` is the successor along the shared
// contour list; adjacency lists of many cells alias excerpts of these chains.
struct MatchNode {
  MatchPoint point;
  NodeId next = kNoNode;
};

// Append-only node pool. Identifiers are dense and stable; next-links are
// writable until freeze(), immutable afterwards.
class NodeStore {
 public:
  NodeId add(const MatchPoint& p) {
    require_mutable();
    if (nodes_.size() >= static_cast<std::size_t>(std::numeric_limits<NodeId>::max()))
      throw std::length_error("node store exhausted its id space");
    nodes_.push_back(MatchNode{p, kNoNode});
    return static_cast<NodeId>(nodes_.size() - 1);
  }

  void set_next(NodeId id, NodeId next) {
    require_mutable();
    nodes_[check(id)].next = next;
  }

  void freeze() noexcept { frozen_ = true; }
  bool frozen() const noexcept { return frozen_; }

  NodeId next(NodeId id) const { return nodes_[check(id)].next; }
  const MatchPoint& point(NodeId id) const { return nodes_[check(id)].point; }
  std::size_t size() const noexcept { return nodes_.size(); }

 private:
  void require_mutable() const {
    if (frozen_) throw std::logic_error("node store is frozen");
  }

  std::size_t check(NodeId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= nodes_.size())
      throw std::out_of_range("node id out of range");
    return static_cast<std::size_t>(id);
  }

  std::vector<MatchNode> nodes_;
  bool frozen_ = false;
};

}  // namespace lcsg
