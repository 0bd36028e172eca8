#pragma once

#include "framecoh/frame.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace framecoh {

/// Diagonal of +-1 signs; G = F D is flipping equivalent to F.
class FlipPattern {
 public:
  FlipPattern() = default;
  /// Throws std::invalid_argument for entries other than +1 / -1.
  explicit FlipPattern(std::vector<int> signs);
  static FlipPattern all_keep(Index n);
  /// Parses "+-+--".
  static FlipPattern parse(std::string_view text);

  Index size() const noexcept { return static_cast<Index>(signs_.size()); }
  int operator[](Index i) const { return signs_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& signs() const noexcept { return signs_; }
  std::string to_string() const;

  friend bool operator==(const FlipPattern&, const FlipPattern&) = default;

 private:
  std::vector<int> signs_;
};

/// Diagonal of unimodular phases; G = F D is wiggling equivalent to F.
class WigglePattern {
 public:
  /// Throws std::invalid_argument when some |phase| differs from 1 by more than 1e-12.
  explicit WigglePattern(std::vector<cd> phases);
  static WigglePattern from_flip(const FlipPattern& flip);

  Index size() const noexcept { return static_cast<Index>(phases_.size()); }
  const std::vector<cd>& phases() const noexcept { return phases_; }
  /// True when every phase is exactly +1 or -1.
  bool is_flip() const noexcept;

 private:
  std::vector<cd> phases_;
};

/// Column n multiplied by phases[n]. Stays real when the frame is real and the pattern is a flip.
Frame apply_wiggle(const Frame& frame, const WigglePattern& pattern);
Frame apply_flip(const Frame& frame, const FlipPattern& pattern);

struct FlipResult {
  Frame frame;
  FlipPattern pattern;
};

/// Linear-time flipping: keep f_1, then keep f_n iff
/// |sum_{i<n} g_i + f_n| <= |sum_{i<n} g_i - f_n| (ties keep). O(MN).
FlipResult linear_time_flip(const Frame& frame);

inline constexpr Index kMaxOracleColumns = 24;

struct FlipOracleResult {
  Frame frame;
  FlipPattern pattern;
  double min_nu = 0.0;
};

/// Minimizes average coherence over all 2^(N-1) flips with the first sign fixed to +1.
/// Ties go to the lowest pattern index (bit j set = column j+1 flipped).
/// Throws std::invalid_argument for N > kMaxOracleColumns or N < 2.
FlipOracleResult exhaustive_flip_oracle(const Frame& frame);

}  // namespace framecoh
