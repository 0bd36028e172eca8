#pragma once

#include "framecoh/frame.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace framecoh {

using Warnings = std::vector<std::string>;

struct GaussianFrameSpec {
  Index rows = 0;  ///< M
  Index cols = 0;  ///< N
  std::uint64_t seed = 0;

  void validate() const;
  /// 60 ln N <= M <= (N - 1) / (4 ln N)
  bool in_theorem_regime() const;
};

/// Probability-(1 - 11/N) envelopes for normalized Gaussian frames.
struct GaussianBounds {
  double mu;
  double nu;
  double spectral_norm;
};
GaussianBounds gaussian_bounds(Index rows, Index cols);

/// i.i.d. N(0,1) entries, column n drawn from stream hash64(seed, n), then normalized.
/// Columns with norm below 1e-12 are redrawn from the same stream (with a warning).
Frame build_gaussian(const GaussianFrameSpec& spec, Warnings* warnings = nullptr);

struct HarmonicFrameSpec {
  Index dft_size = 0;       ///< N
  Index expected_rows = 0;  ///< M: each DFT row is kept with probability M/N
  std::uint64_t seed = 0;

  void validate() const;
  /// 16 ln N <= M <= N / 3
  bool in_theorem_regime() const;
};

struct HarmonicFrame {
  Frame frame;
  std::vector<Index> selected_rows;  ///< ascending DFT row indices
};

/// Rows of U_{kl} = exp(2 pi i k l / N) kept by independent Bernoulli(M/N) draws.
/// An empty draw is retried with seed + 1 (with a warning).
HarmonicFrame build_harmonic(const HarmonicFrameSpec& spec, Warnings* warnings = nullptr);

/// Frame built from the given DFT rows, in the given order.
Frame harmonic_frame_from_rows(Index dft_size, const std::vector<Index>& rows);

/// High-probability envelope on mu for random harmonic frames.
double harmonic_mu_bound(Index dft_size, Index expected_rows);

inline constexpr std::uint64_t kMaxCodeFrameColumns = std::uint64_t{1} << 24;

struct CodeFrameSpec {
  unsigned m = 0;  ///< field GF(2^m)
  unsigned t = 0;
  std::optional<std::uint64_t> modulus;  ///< defaults to default_modulus(m)

  void validate() const;
  std::uint64_t rows() const { return std::uint64_t{1} << m; }
  std::uint64_t cols() const { return std::uint64_t{1} << ((t + 1) * m); }
  std::uint64_t resolved_modulus() const;

  /// Upper bound 1 / sqrt(2^(m - 2t - 1)) on mu.
  double mu_bound() const;
  /// ||F||_2^2 = 2^(tm).
  double spectral_norm_squared() const;
};

/// Materializes the 2^m x 2^((t+1)m) frame
///   F[x, alpha] = 2^(-m/2) (-1)^Tr(alpha_0 x + sum_i alpha_i x^(2^i + 1)).
/// Column c encodes alpha as c = sum_i alpha_i 2^(i m) (alpha_0 in the low bits).
/// Throws std::length_error above kMaxCodeFrameColumns columns.
Frame build_code_frame(const CodeFrameSpec& spec);

}  // namespace framecoh
