#include "framecoh/sparse_ost.hpp"

#include "framecoh/code_frame.hpp"
#include "framecoh/rng.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <unordered_set>

namespace framecoh {

namespace {

constexpr double kRankTolerance = 1e-10;

void require_t(double t) {
  if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("t must lie in (0, 1)");
}

// Distinct positions for each of x's nonzeros under a uniformly random permutation.
std::vector<Index> permuted_positions(Index n, Index k, CounterRng& rng) {
  std::vector<Index> out;
  out.reserve(static_cast<std::size_t>(k));
  std::unordered_set<Index> used;
  while (static_cast<Index>(out.size()) < k) {
    const auto p = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
    if (used.insert(p).second) out.push_back(p);
  }
  return out;
}

bool outside_band(double energy, double reference, double delta) {
  return energy < (1.0 - delta) * reference || energy > (1.0 + delta) * reference;
}

}  // namespace

// --- signals ----------------------------------------------------------------

SparseSignal SparseSignal::from_dense(const Eigen::VectorXcd& x) {
  SparseSignal s;
  s.length = x.size();
  for (Index i = 0; i < x.size(); ++i) {
    if (x(i) != cd(0.0, 0.0)) {
      s.support.push_back(i);
      s.values.push_back(x(i));
    }
  }
  return s;
}

Eigen::VectorXcd SparseSignal::dense() const {
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(length);
  for (std::size_t k = 0; k < support.size(); ++k) x(support[k]) = values[k];
  return x;
}

double SparseSignal::norm() const {
  double sq = 0.0;
  for (const cd& v : values) sq += std::norm(v);
  return std::sqrt(sq);
}

Problem generate_problem(const Frame& frame, Index k, const AmplitudeSpec& amplitudes, const NoiseModel& noise,
                         std::uint64_t seed) {
  const Index n = frame.cols();
  if (k < 0 || k > n) throw std::invalid_argument("sparsity K exceeds N");
  if (noise.sigma2 < 0.0) throw std::invalid_argument("noise variance must be >= 0");

  CounterRng rng(seed);
  // Partial Fisher-Yates gives a uniform K-subset.
  std::vector<Index> pool(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  for (Index i = 0; i < k; ++i) {
    const auto j = i + static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  std::vector<Index> support(pool.begin(), pool.begin() + k);
  std::sort(support.begin(), support.end());

  SparseSignal x;
  x.length = n;
  x.support = support;
  const Index high = amplitudes.law == AmplitudeLaw::Flat ? k : (k + 1) / 2;
  for (Index i = 0; i < k; ++i) {
    const double magnitude = i < high ? amplitudes.alpha : amplitudes.low;
    if (frame.is_real()) {
      x.values.emplace_back((rng.next() >> 63) ? -magnitude : magnitude, 0.0);
    } else {
      x.values.push_back(std::polar(magnitude, 2.0 * std::numbers::pi * rng.uniform()));
    }
  }
  // Which support entries get the high tier is itself random.
  if (amplitudes.law == AmplitudeLaw::TwoTier) {
    for (Index i = k - 1; i > 0; --i) {
      const auto j = static_cast<Index>(rng.below(static_cast<std::uint64_t>(i + 1)));
      std::swap(x.values[static_cast<std::size_t>(i)], x.values[static_cast<std::size_t>(j)]);
    }
  }

  Eigen::VectorXcd y = frame.visit([&](const auto& d) -> Eigen::VectorXcd {
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(d.rows());
    for (std::size_t i = 0; i < x.support.size(); ++i) acc += x.values[i] * d.col(x.support[i]).template cast<cd>();
    return acc;
  });
  if (noise.sigma2 > 0.0) {
    CounterRng noise_rng(noise.seed);
    const double sd = std::sqrt(noise.sigma2 / 2.0);
    for (Index i = 0; i < y.size(); ++i) {
      const double re = noise_rng.normal();
      y(i) += sd * cd(re, noise_rng.normal());
    }
  }
  return {std::move(x), std::move(y)};
}

double signal_to_noise(const SparseSignal& x, Index rows, double sigma2) {
  const double energy = x.norm() * x.norm();
  return energy / (static_cast<double>(rows) * sigma2);
}

// --- one-step thresholding --------------------------------------------------

double ost_threshold(double mu, Index rows, double snr, double sigma2, Index n, double t) {
  require_t(t);
  if (!(sigma2 > 0.0)) throw std::invalid_argument("ost_threshold: sigma2 must be positive");
  const double scale = std::sqrt(2.0 * sigma2 * std::log(static_cast<double>(n)));
  const double interference = (10.0 / t) * mu * std::sqrt(static_cast<double>(rows) * snr);
  const double noise = std::sqrt(2.0) / (1.0 - t);
  return scale * std::max(interference, noise);
}

RecoveryResult ost_recover(const Frame& frame, const Eigen::VectorXcd& y, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("ost_recover: lambda must be positive");
  if (y.size() != frame.rows()) throw std::invalid_argument("ost_recover: measurement length != M");

  RecoveryResult result;
  result.lambda = lambda;
  result.proxy = frame.visit([&](const auto& d) -> Eigen::VectorXcd { return d.adjoint() * y; });
  for (Index i = 0; i < result.proxy.size(); ++i) {
    if (std::abs(result.proxy(i)) > lambda) result.support.push_back(i);
  }
  result.estimate = Eigen::VectorXcd::Zero(frame.cols());
  if (result.support.empty()) return result;

  Eigen::MatrixXcd selected(frame.rows(), static_cast<Index>(result.support.size()));
  for (std::size_t k = 0; k < result.support.size(); ++k) {
    selected.col(static_cast<Index>(k)) = frame.column(result.support[k]);
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod;
  cod.setThreshold(kRankTolerance);
  cod.compute(selected);
  const Eigen::VectorXcd coeffs = cod.solve(y);
  result.rank = cod.rank();
  result.rank_deficient = result.rank < selected.cols();
  for (std::size_t k = 0; k < result.support.size(); ++k) {
    result.estimate(result.support[k]) = coeffs(static_cast<Index>(k));
  }
  return result;
}

std::vector<Index> FloorSets::both() const {
  std::vector<Index> out;
  std::set_intersection(noise.begin(), noise.end(), interference.begin(), interference.end(),
                        std::back_inserter(out));
  return out;
}

FloorSets floor_sets(const SparseSignal& x, double sigma2, double mu, Index n, double t) {
  require_t(t);
  const double log_n = std::log(static_cast<double>(n));
  FloorSets f;
  f.noise_level = (2.0 * std::sqrt(2.0) / (1.0 - t)) * std::sqrt(2.0 * sigma2 * log_n);
  f.interference_level = (20.0 / t) * mu * x.norm() * std::sqrt(2.0 * log_n);
  for (std::size_t k = 0; k < x.support.size(); ++k) {
    const double magnitude = std::abs(x.values[k]);
    if (magnitude > f.noise_level) f.noise.push_back(x.support[k]);
    if (magnitude > f.interference_level) f.interference.push_back(x.support[k]);
  }
  return f;
}

RspReport check_rsp_bounds(const RecoveryResult& result, const SparseSignal& x, double sigma2, Index n,
                           const FloorSets& floors, double spectral_norm_sq) {
  const double log_n = std::log(static_cast<double>(n));
  const double slack = 1e-12 * std::max(1.0, x.norm());
  const Eigen::VectorXcd dense = x.dense();
  RspReport r;
  r.l2_error = (dense - result.estimate).norm();

  double missed_sq = 0.0;
  for (std::size_t k = 0; k < x.support.size(); ++k) {
    if (!std::binary_search(result.support.begin(), result.support.end(), x.support[k])) {
      missed_sq += std::norm(x.values[k]);
    }
  }
  const auto khat = static_cast<double>(result.support.size());
  r.bound_rhs = OstConstants::c2() * std::sqrt(sigma2 * khat * log_n) + OstConstants::c3() * std::sqrt(missed_sq);
  r.bound_ok = r.l2_error <= r.bound_rhs + slack;

  const auto both = floors.both();
  r.t_count = static_cast<Index>(both.size());
  std::vector<double> magnitudes;
  for (const cd& v : x.values) magnitudes.push_back(std::abs(v));
  std::sort(magnitudes.begin(), magnitudes.end(), std::greater<>());
  double tail_sq = 0.0;
  for (std::size_t k = static_cast<std::size_t>(r.t_count); k < magnitudes.size(); ++k) {
    tail_sq += magnitudes[k] * magnitudes[k];
  }
  const auto k_count = static_cast<double>(x.sparsity());
  r.bound_rhs_t = OstConstants::c2() * std::sqrt(sigma2 * k_count * log_n) + OstConstants::c3() * std::sqrt(tail_sq);
  r.bound_t_ok = r.l2_error <= r.bound_rhs_t + slack;

  const bool floors_found = std::includes(result.support.begin(), result.support.end(), both.begin(), both.end());
  const bool no_false_alarm = std::includes(x.support.begin(), x.support.end(), result.support.begin(),
                                            result.support.end());
  r.support_ok = floors_found && no_false_alarm;

  const double c1 = OstConstants::c1();
  r.sparsity_limit = static_cast<double>(n) / (c1 * c1 * spectral_norm_sq * log_n);
  r.regime_ok = k_count <= r.sparsity_limit;
  return r;
}

// --- Weak RIP ---------------------------------------------------------------

bool weak_rip_conditions(double mu, double rows, double n, Index k, double delta) {
  const double lhs = 2.0 * static_cast<double>(k) * std::log(n);
  const double coherence_cap = mu > 0.0 ? delta * delta / (100.0 * mu * mu) : std::numeric_limits<double>::infinity();
  return n >= 128.0 && lhs <= std::min(coherence_cap, rows);
}

WeakRipEstimate weak_rip_estimate(const Frame& frame, const SparseSignal& x, double delta, std::size_t trials,
                                  std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("weak_rip_estimate: trials must be >= 1");
  if (x.length != frame.cols()) throw std::invalid_argument("weak_rip_estimate: signal length != N");
  const double reference = x.norm() * x.norm();
  WeakRipEstimate est{0, trials};
  frame.visit([&](const auto& d) {
    Eigen::VectorXcd image(d.rows());
    for (std::size_t trial = 0; trial < trials; ++trial) {
      CounterRng rng(hash64(seed, trial));
      const auto positions = permuted_positions(x.length, x.sparsity(), rng);
      image.setZero();
      for (std::size_t k = 0; k < positions.size(); ++k) {
        image += x.values[k] * d.col(positions[k]).template cast<cd>();
      }
      if (outside_band(image.squaredNorm(), reference, delta)) ++est.violations;
    }
  });
  return est;
}

WeakRipEstimate weak_rip_estimate(const CodeFrameOperator& frame, const SparseSignal& x, double delta,
                                  std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("weak_rip_estimate: trials must be >= 1");
  if (static_cast<std::uint64_t>(x.length) != frame.cols()) {
    throw std::invalid_argument("weak_rip_estimate: signal length != N");
  }
  const double reference = x.norm() * x.norm();
  WeakRipEstimate est{0, trials};
  for (std::size_t trial = 0; trial < trials; ++trial) {
    CounterRng rng(hash64(seed, trial));
    const auto positions = permuted_positions(x.length, x.sparsity(), rng);
    // ||F y||^2 = sum_{a,b} conj(y_a) y_b <f_a, f_b>, with unit diagonal.
    double energy = reference;
    for (std::size_t a = 0; a < positions.size(); ++a) {
      for (std::size_t b = a + 1; b < positions.size(); ++b) {
        const double g = frame.inner_product(static_cast<std::uint64_t>(positions[a]),
                                             static_cast<std::uint64_t>(positions[b]));
        energy += 2.0 * g * std::real(std::conj(x.values[a]) * x.values[b]);
      }
    }
    if (outside_band(energy, reference, delta)) ++est.violations;
  }
  return est;
}

}  // namespace framecoh
