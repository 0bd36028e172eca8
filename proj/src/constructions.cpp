#include "framecoh/constructions.hpp"

#include "framecoh/code_frame.hpp"
#include "framecoh/gf2m.hpp"
#include "framecoh/parallel.hpp"
#include "framecoh/rng.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace framecoh {

namespace {

constexpr double kTinyColumn = 1e-12;

double ln(Index n) { return std::log(static_cast<double>(n)); }

double positive_ratio(double num, double den) {
  return den > 0.0 ? num / den : std::numeric_limits<double>::infinity();
}

}  // namespace

// --- Gaussian ---------------------------------------------------------------

void GaussianFrameSpec::validate() const {
  if (rows < 1) throw std::invalid_argument("gaussian frame: M must be >= 1");
  if (cols < 2) throw std::invalid_argument("gaussian frame: N must be >= 2");
}

bool GaussianFrameSpec::in_theorem_regime() const {
  const double m = static_cast<double>(rows);
  return 60.0 * ln(cols) <= m && m <= (static_cast<double>(cols) - 1.0) / (4.0 * ln(cols));
}

GaussianBounds gaussian_bounds(Index rows, Index cols) {
  const double m = static_cast<double>(rows);
  const double n = static_cast<double>(cols);
  const double l = std::log(n);
  GaussianBounds b;
  b.mu = positive_ratio(std::sqrt(15.0 * l), std::sqrt(m) - std::sqrt(12.0 * l));
  b.nu = positive_ratio(std::sqrt(15.0 * l), m - std::sqrt(12.0 * m * l));
  const double inner = m - std::sqrt(8.0 * m * l);
  b.spectral_norm = positive_ratio(std::sqrt(m) + std::sqrt(n) + std::sqrt(2.0 * l),
                                   inner > 0.0 ? std::sqrt(inner) : 0.0);
  return b;
}

Frame build_gaussian(const GaussianFrameSpec& spec, Warnings* warnings) {
  spec.validate();
  Eigen::MatrixXd data(spec.rows, spec.cols);
  std::vector<int> redraws(static_cast<std::size_t>(spec.cols), 0);
  parallel_for(static_cast<std::size_t>(spec.cols), [&](std::size_t n) {
    CounterRng rng(hash64(spec.seed, n));
    auto col = data.col(static_cast<Index>(n));
    for (;;) {
      for (Index i = 0; i < spec.rows; ++i) col(i) = rng.normal();
      if (col.norm() >= kTinyColumn) break;
      ++redraws[n];
    }
  });
  if (warnings) {
    for (std::size_t n = 0; n < redraws.size(); ++n) {
      if (redraws[n]) {
        warnings->push_back("gaussian frame: column " + std::to_string(n) + " redrawn " +
                            std::to_string(redraws[n]) + " time(s) (norm < 1e-12)");
      }
    }
  }
  return Frame::from_real(std::move(data));
}

// --- Harmonic ---------------------------------------------------------------

void HarmonicFrameSpec::validate() const {
  if (dft_size < 1) throw std::invalid_argument("harmonic frame: N must be >= 1");
  if (expected_rows < 1 || expected_rows > dft_size) {
    throw std::invalid_argument("harmonic frame: need 1 <= M <= N");
  }
}

bool HarmonicFrameSpec::in_theorem_regime() const {
  const double m = static_cast<double>(expected_rows);
  return 16.0 * ln(dft_size) <= m && m <= static_cast<double>(dft_size) / 3.0;
}

double harmonic_mu_bound(Index dft_size, Index expected_rows) {
  const double n = static_cast<double>(dft_size);
  const double m = static_cast<double>(expected_rows);
  return std::sqrt(118.0 * (n - m) * std::log(n) / (m * n));
}

Frame harmonic_frame_from_rows(Index dft_size, const std::vector<Index>& rows) {
  if (rows.empty()) throw std::invalid_argument("harmonic frame: no rows selected");
  const auto n = static_cast<std::uint64_t>(dft_size);
  std::vector<cd> roots(n);
  for (std::uint64_t r = 0; r < n; ++r) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
    roots[r] = cd(std::cos(angle), std::sin(angle));
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(rows.size()));
  Eigen::MatrixXcd data(static_cast<Index>(rows.size()), dft_size);
  for (Index l = 0; l < dft_size; ++l) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto k = static_cast<std::uint64_t>(rows[i]);
      data(static_cast<Index>(i), l) = scale * roots[(k * static_cast<std::uint64_t>(l)) % n];
    }
  }
  return Frame::from_complex(std::move(data));
}

HarmonicFrame build_harmonic(const HarmonicFrameSpec& spec, Warnings* warnings) {
  spec.validate();
  const double p = static_cast<double>(spec.expected_rows) / static_cast<double>(spec.dft_size);
  std::uint64_t seed = spec.seed;
  std::vector<Index> kept;
  for (;;) {
    CounterRng rng(seed);
    kept.clear();
    for (Index k = 0; k < spec.dft_size; ++k) {
      if (rng.uniform() <= p) kept.push_back(k);
    }
    if (!kept.empty()) break;
    if (warnings) {
      warnings->push_back("harmonic frame: empty row selection for seed " + std::to_string(seed) +
                          ", retrying with seed " + std::to_string(seed + 1));
    }
    ++seed;
  }
  return {harmonic_frame_from_rows(spec.dft_size, kept), std::move(kept)};
}

// --- Code-based -------------------------------------------------------------

void CodeFrameSpec::validate() const {
  if (m < 1) throw std::invalid_argument("code frame: m must be >= 1");
  if (t < 1) throw std::invalid_argument("code frame: t must be >= 1");
  if (m > kMaxFieldDegree) {
    throw std::invalid_argument("code frame: m must be <= " + std::to_string(kMaxFieldDegree));
  }
  if ((t + 1) * m > 62) throw std::invalid_argument("code frame: column index exceeds 62 bits");
}

std::uint64_t CodeFrameSpec::resolved_modulus() const {
  return modulus ? *modulus : default_modulus(m);
}

double CodeFrameSpec::mu_bound() const {
  return 1.0 / std::sqrt(std::ldexp(1.0, static_cast<int>(m) - 2 * static_cast<int>(t) - 1));
}

double CodeFrameSpec::spectral_norm_squared() const {
  return std::ldexp(1.0, static_cast<int>(t * m));
}

Frame build_code_frame(const CodeFrameSpec& spec) {
  spec.validate();
  if (spec.cols() > kMaxCodeFrameColumns) {
    throw std::length_error("code frame needs " + std::to_string(spec.cols()) + " columns; at most " +
                            std::to_string(kMaxCodeFrameColumns) + " allowed");
  }
  const CodeFrameOperator op(spec);
  const auto rows = static_cast<Index>(spec.rows());
  const auto cols = static_cast<Index>(spec.cols());
  std::vector<std::uint64_t> masks(spec.rows());
  for (std::uint64_t x = 0; x < spec.rows(); ++x) masks[x] = op.row_mask(x);

  const double mag = op.entry_magnitude();
  Eigen::MatrixXd data(rows, cols);
  for (Index c = 0; c < cols; ++c) {
    for (Index x = 0; x < rows; ++x) {
      const bool odd = std::popcount(static_cast<std::uint64_t>(c) & masks[static_cast<std::size_t>(x)]) & 1;
      data(x, c) = odd ? -mag : mag;
    }
  }
  return Frame::from_real(std::move(data));
}

}  // namespace framecoh
