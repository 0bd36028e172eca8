#include "framecoh/equivalence.hpp"

#include "framecoh/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <type_traits>

namespace framecoh {

namespace {

constexpr double kUnimodularTol = 1e-12;
constexpr unsigned kOracleBlockBits = 12;

void require_length(const Frame& frame, Index n) {
  if (frame.cols() != n) {
    throw std::invalid_argument("pattern length " + std::to_string(n) + " does not match frame with " +
                                std::to_string(frame.cols()) + " columns");
  }
}

struct BlockBest {
  double nu = std::numeric_limits<double>::infinity();
  std::uint64_t pattern = 0;
};

// Scans patterns (block << low_bits) | gray(k) for k in [0, 2^low_bits), tracking
// r_i = sum_{j != i} s_j G_ij so each step costs O(N).
template <class Matrix>
BlockBest scan_block(const Matrix& g, std::uint64_t block, unsigned low_bits) {
  using Scalar = typename Matrix::Scalar;
  const Index n = g.rows();
  const std::uint64_t base = block << low_bits;
  std::vector<int> s(static_cast<std::size_t>(n), 1);
  for (Index j = 1; j < n; ++j) {
    if ((base >> (j - 1)) & 1) s[static_cast<std::size_t>(j)] = -1;
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> r(n);
  for (Index i = 0; i < n; ++i) {
    Scalar acc(0);
    for (Index j = 0; j < n; ++j) {
      if (j != i) acc += static_cast<double>(s[static_cast<std::size_t>(j)]) * g(i, j);
    }
    r(i) = acc;
  }

  BlockBest best;
  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  for (std::uint64_t k = 0; k < steps; ++k) {
    if (k > 0) {
      const auto bit = static_cast<Index>(std::countr_zero(k));
      const Index j = bit + 1;
      const double old = s[static_cast<std::size_t>(j)];
      for (Index i = 0; i < n; ++i) {
        if (i != j) r(i) -= 2.0 * old * g(i, j);
      }
      s[static_cast<std::size_t>(j)] = -s[static_cast<std::size_t>(j)];
    }
    double worst = 0.0;
    for (Index i = 0; i < n; ++i) worst = std::max(worst, std::abs(r(i)));
    const std::uint64_t pattern = base | (k ^ (k >> 1));
    if (worst < best.nu || (worst == best.nu && pattern < best.pattern)) best = {worst, pattern};
  }
  return best;
}

}  // namespace

FlipPattern::FlipPattern(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("flip pattern entries must be +1 or -1");
  }
}

FlipPattern FlipPattern::all_keep(Index n) {
  return FlipPattern(std::vector<int>(static_cast<std::size_t>(n), 1));
}

FlipPattern FlipPattern::parse(std::string_view text) {
  std::vector<int> signs;
  signs.reserve(text.size());
  for (char c : text) {
    if (c == '+') signs.push_back(1);
    else if (c == '-') signs.push_back(-1);
    else throw std::invalid_argument(std::string("unexpected character '") + c + "' in flip pattern");
  }
  return FlipPattern(std::move(signs));
}

std::string FlipPattern::to_string() const {
  std::string out;
  out.reserve(signs_.size());
  for (int s : signs_) out += s > 0 ? '+' : '-';
  return out;
}

WigglePattern::WigglePattern(std::vector<cd> phases) : phases_(std::move(phases)) {
  for (std::size_t i = 0; i < phases_.size(); ++i) {
    if (std::abs(std::abs(phases_[i]) - 1.0) > kUnimodularTol) {
      throw std::invalid_argument("wiggle phase " + std::to_string(i) + " is not unimodular");
    }
  }
}

WigglePattern WigglePattern::from_flip(const FlipPattern& flip) {
  std::vector<cd> phases;
  phases.reserve(flip.signs().size());
  for (int s : flip.signs()) phases.emplace_back(static_cast<double>(s), 0.0);
  return WigglePattern(std::move(phases));
}

bool WigglePattern::is_flip() const noexcept {
  return std::all_of(phases_.begin(), phases_.end(),
                     [](cd p) { return p.imag() == 0.0 && (p.real() == 1.0 || p.real() == -1.0); });
}

Frame apply_wiggle(const Frame& frame, const WigglePattern& pattern) {
  require_length(frame, pattern.size());
  if (frame.is_real() && pattern.is_flip()) {
    Eigen::MatrixXd d = frame.real_matrix();
    for (Index j = 0; j < d.cols(); ++j) d.col(j) *= pattern.phases()[static_cast<std::size_t>(j)].real();
    return Frame::from_real(std::move(d));
  }
  Eigen::MatrixXcd d = frame.to_complex();
  for (Index j = 0; j < d.cols(); ++j) d.col(j) *= pattern.phases()[static_cast<std::size_t>(j)];
  return Frame::from_complex(std::move(d));
}

Frame apply_flip(const Frame& frame, const FlipPattern& pattern) {
  require_length(frame, pattern.size());
  return frame.visit([&](const auto& d) {
    auto out = d.eval();
    for (Index j = 0; j < out.cols(); ++j) {
      if (pattern[j] < 0) out.col(j) = -out.col(j);
    }
    if constexpr (std::is_same_v<decltype(out), Eigen::MatrixXd>) {
      return Frame::from_real(std::move(out));
    } else {
      return Frame::from_complex(std::move(out));
    }
  });
}

FlipResult linear_time_flip(const Frame& frame) {
  std::vector<int> signs(static_cast<std::size_t>(frame.cols()), 1);
  frame.visit([&](const auto& d) {
    auto sum = d.col(0).eval();
    for (Index n = 1; n < d.cols(); ++n) {
      const double keep = (sum + d.col(n)).norm();
      const double flip = (sum - d.col(n)).norm();
      if (keep <= flip) {
        sum += d.col(n);
      } else {
        sum -= d.col(n);
        signs[static_cast<std::size_t>(n)] = -1;
      }
    }
  });
  FlipPattern pattern(std::move(signs));
  return {apply_flip(frame, pattern), std::move(pattern)};
}

FlipOracleResult exhaustive_flip_oracle(const Frame& frame) {
  const Index n = frame.cols();
  if (n > kMaxOracleColumns) {
    throw std::invalid_argument("exhaustive flip oracle limited to N <= " + std::to_string(kMaxOracleColumns) +
                                " (got N = " + std::to_string(n) + ")");
  }
  if (n < 2) throw std::invalid_argument("coherence undefined for a single vector");

  const auto free_bits = static_cast<unsigned>(n - 1);
  const unsigned low_bits = std::min(free_bits, kOracleBlockBits);
  const std::size_t blocks = std::size_t{1} << (free_bits - low_bits);
  std::vector<BlockBest> per_block(blocks);
  frame.visit([&](const auto& d) {
    const auto g = (d.adjoint() * d).eval();
    parallel_for(blocks, [&](std::size_t b) { per_block[b] = scan_block(g, b, low_bits); });
  });

  BlockBest best = per_block.front();
  for (const auto& candidate : per_block) {
    if (candidate.nu < best.nu || (candidate.nu == best.nu && candidate.pattern < best.pattern)) best = candidate;
  }

  std::vector<int> signs(static_cast<std::size_t>(n), 1);
  for (Index j = 1; j < n; ++j) {
    if ((best.pattern >> (j - 1)) & 1) signs[static_cast<std::size_t>(j)] = -1;
  }
  FlipPattern pattern(std::move(signs));
  Frame flipped = apply_flip(frame, pattern);
  const double nu = average_coherence(flipped);
  return {std::move(flipped), std::move(pattern), nu};
}

}  // namespace framecoh
