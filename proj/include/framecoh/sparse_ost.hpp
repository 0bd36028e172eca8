#pragma once

#include "framecoh/frame.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace framecoh {

class CodeFrameOperator;

/// Noise-model constants of the reconstruction guarantee.
struct OstConstants {
  static double c1() { return 37.0 * std::exp(1.0); }
  static double c2() { return 2.0 / (1.0 - std::exp(-0.5)); }
  static double c3() { return 1.0 + std::exp(-0.5) / (1.0 - std::exp(-0.5)); }
};

struct SparseSignal {
  Index length = 0;
  std::vector<Index> support;  ///< ascending
  std::vector<cd> values;      ///< values[k] sits at support[k]

  static SparseSignal from_dense(const Eigen::VectorXcd& x);
  Eigen::VectorXcd dense() const;
  Index sparsity() const noexcept { return static_cast<Index>(support.size()); }
  double norm() const;
};

/// Entries of e are i.i.d. complex Gaussian with E|e_i|^2 = sigma2
/// (real and imaginary parts each N(0, sigma2 / 2)).
struct NoiseModel {
  double sigma2 = 0.0;
  std::uint64_t seed = 0;
};

enum class AmplitudeLaw {
  Flat,     ///< every |x_n| = alpha
  TwoTier,  ///< ceil(K/2) entries at alpha, the rest at `low`
};

struct AmplitudeSpec {
  AmplitudeLaw law = AmplitudeLaw::Flat;
  double alpha = 1.0;
  double low = 0.0;
};

struct Problem {
  SparseSignal x;
  Eigen::VectorXcd y;
};

/// Uniform random K-subset support, magnitudes from the amplitude law with random
/// signs (real frames) or random phases (complex frames), y = F x + e.
/// Throws std::invalid_argument for K > N.
Problem generate_problem(const Frame& frame, Index k, const AmplitudeSpec& amplitudes, const NoiseModel& noise,
                         std::uint64_t seed);

/// ||x||^2 / E||e||^2 = ||x||^2 / (M sigma2).
double signal_to_noise(const SparseSignal& x, Index rows, double sigma2);

/// lambda = sqrt(2 sigma2 ln N) max{(10/t) mu sqrt(M snr), sqrt(2)/(1-t)}.
/// Throws std::invalid_argument unless 0 < t < 1 and sigma2 > 0.
double ost_threshold(double mu, Index rows, double snr, double sigma2, Index n, double t);

struct RecoveryResult {
  std::vector<Index> support;     ///< estimated support, ascending
  Eigen::VectorXcd estimate;      ///< zero off the estimated support
  Eigen::VectorXcd proxy;         ///< F^H y
  double lambda = 0.0;
  Index rank = 0;                 ///< numerical rank of the selected columns
  bool rank_deficient = false;    ///< minimum-norm solution was used
};

/// One-step thresholding: z = F^H y, keep |z_n| > lambda, least squares on the kept columns.
/// Throws std::invalid_argument for lambda <= 0 or a size mismatch.
RecoveryResult ost_recover(const Frame& frame, const Eigen::VectorXcd& y, double lambda);

struct FloorSets {
  std::vector<Index> noise;         ///< |x_n| > (2 sqrt2 / (1-t)) sqrt(2 sigma2 ln N)
  std::vector<Index> interference;  ///< |x_n| > (20/t) mu ||x|| sqrt(2 ln N)
  double noise_level = 0.0;
  double interference_level = 0.0;

  std::vector<Index> both() const;
};

FloorSets floor_sets(const SparseSignal& x, double sigma2, double mu, Index n, double t);

struct RspReport {
  double l2_error = 0.0;
  double bound_rhs = 0.0;      ///< c2 sqrt(sigma2 |Khat| ln N) + c3 ||x_{K \ Khat}||
  double bound_rhs_t = 0.0;    ///< c2 sqrt(sigma2 K ln N) + c3 ||x - x_T||
  Index t_count = 0;           ///< T = |floors.both()|
  bool support_ok = false;     ///< floors.both() within Khat within K
  bool bound_ok = false;
  bool bound_t_ok = false;
  double sparsity_limit = 0.0; ///< N / (c1^2 ||F||^2 ln N)
  bool regime_ok = false;      ///< K <= sparsity_limit

  /// The joint event of the guarantee.
  bool ok() const noexcept { return support_ok && bound_ok; }
};

/// Error comparisons allow an absolute slack of 1e-12 * max(1, ||x||) for rounding in the least squares.
RspReport check_rsp_bounds(const RecoveryResult& result, const SparseSignal& x, double sigma2, Index n,
                           const FloorSets& floors, double spectral_norm_sq);

struct WeakRipEstimate {
  std::size_t violations = 0;
  std::size_t trials = 0;
  double rate() const { return trials ? static_cast<double>(violations) / static_cast<double>(trials) : 0.0; }
};

/// N >= 128 and 2 K ln N <= min{delta^2 / (100 mu^2), M}.
bool weak_rip_conditions(double mu, double rows, double n, Index k, double delta);

/// Fraction of random permutations y of x's entries with ||F y||^2 outside (1 +- delta) ||y||^2.
/// Trial i draws from stream hash64(seed, i).
WeakRipEstimate weak_rip_estimate(const Frame& frame, const SparseSignal& x, double delta, std::size_t trials,
                                  std::uint64_t seed);
/// Same estimator on the matrix-free code frame (x.length must equal its column count).
WeakRipEstimate weak_rip_estimate(const CodeFrameOperator& frame, const SparseSignal& x, double delta,
                                  std::size_t trials, std::uint64_t seed);

}  // namespace framecoh
