#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lcsgraph/rank_matrix.hpp"
#include "lcsgraph/sequence.hpp"

namespace lcsg {

struct ClassifiedMatch {
  MatchPoint point;
  std::int32_t rank = 0;
  // No same-contour match shares the row with a smaller col, nor the col
  // with a smaller row.
  bool dominant = false;
  // The mirror notion: no same-contour match shares the row with a larger
  // col, nor the col with a larger row. A match may carry both flags.
  bool antidominant = false;

  friend bool operator==(const ClassifiedMatch&, const ClassifiedMatch&) = default;
};

// All matches of a pair of sequences, partitioned by rank into contours.
// Within a contour, matches run lower-left to upper-right: ascending col,
// ties broken by descending row.
class MatchClassification {
 public:
  int max_rank() const noexcept { return static_cast<int>(offsets_.size()) - 2; }

  std::span<const ClassifiedMatch> contour(int r) const {
    if (r < 1 || r > max_rank()) throw std::out_of_range("contour rank out of range");
    return {matches_.data() + offsets_[static_cast<std::size_t>(r)],
            offsets_[static_cast<std::size_t>(r) + 1] - offsets_[static_cast<std::size_t>(r)]};
  }

  // Every match, contour-major (rank 1 first), each contour in contour order.
  const std::vector<ClassifiedMatch>& matches() const noexcept { return matches_; }

 private:
  friend MatchClassification classify_matches(const Sequence& a, const Sequence& b,
                                              const RankMatrix& ranks);

  std::vector<ClassifiedMatch> matches_;
  std::vector<std::size_t> offsets_;  // contour r = matches_[offsets_[r], offsets_[r+1])
};

// Requires ranks == compute_ranks(a, b).
MatchClassification classify_matches(const Sequence& a, const Sequence& b,
                                     const RankMatrix& ranks);

}  // namespace lcsg
