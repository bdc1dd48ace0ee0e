#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace lcsg {

// Hard cap on each input length. The structures built from a pair of inputs
// are Theta(m*n) in memory, so anything past this is unusable anyway; an
// explicit error beats an opaque allocation failure.
inline constexpr int kMaxSequenceLength = 1 << 20;

// One input string viewed as 1-indexed byte tokens a_1..a_m. The alphabet is
// whatever bytes actually occur; nothing is culled or remapped.
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(std::string bytes) : bytes_(std::move(bytes)) {
    if (bytes_.size() > static_cast<std::size_t>(kMaxSequenceLength))
      throw std::length_error("input sequence exceeds the 2^20 byte cap");
  }

  int length() const noexcept { return static_cast<int>(bytes_.size()); }

  // 1-based token access.
  unsigned char at(int p) const {
    if (p < 1 || p > length()) throw std::out_of_range("sequence index out of range");
    return static_cast<unsigned char>(bytes_[static_cast<std::size_t>(p) - 1]);
  }

  const std::string& bytes() const noexcept { return bytes_; }

  // The prefix of the first `len` tokens.
  Sequence prefix(int len) const {
    if (len < 0 || len > length()) throw std::out_of_range("prefix length out of range");
    return Sequence(bytes_.substr(0, static_cast<std::size_t>(len)));
  }

 private:
  std::string bytes_;
};

// A cell [row,col] of the dynamic-programming grid with a_row == b_col.
// Cells where the symbols differ are clashes and get no MatchPoint.
struct MatchPoint {
  int row = 0;
  int col = 0;
  unsigned char symbol = 0;

  friend bool operator==(const MatchPoint&, const MatchPoint&) = default;
};

}  // namespace lcsg
