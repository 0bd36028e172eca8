#pragma once

#include "framecoh/frame.hpp"
#include "framecoh/sparse_ost.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace framecoh {

enum class ExperimentId {
  GaussianGeometry,
  HarmonicGeometry,
  CodeGeometry,
  FlipGuarantee,
  WeakRip,
  OstRecovery,
  BoundsFigure,
};

std::string_view to_string(ExperimentId id);
std::optional<ExperimentId> parse_experiment_id(std::string_view text);
const std::vector<std::string>& experiment_names();

/// Seed of trial i: hash64(base_seed, i). Frozen; output never depends on thread count.
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t trial);

struct ExperimentConfig {
  ExperimentId id = ExperimentId::BoundsFigure;

  Index rows = 0;        ///< M
  Index cols = 0;        ///< N
  unsigned m = 0;        ///< code frames: GF(2^m)
  unsigned t = 1;        ///< code frames
  Index sparsity = 0;    ///< K
  double sigma2 = 1.0;
  std::optional<double> snr;     ///< OST: defaults to ||x||^2 / (M sigma2) of each trial
  std::optional<double> lambda;  ///< OST: explicit threshold (required when sigma2 = 0)
  double t_param = 0.5;
  double delta = 0.1;

  std::uint64_t base_seed = 0;
  std::size_t trials = 100;

  /// weak-rip: identity | gaussian | code; ost-recovery: gaussian | identity
  std::string family;
  AmplitudeLaw law = AmplitudeLaw::Flat;
  double amplitude_factor = 10.0;  ///< OST: alpha as a multiple of the noise floor
  bool oracle = false;             ///< flip-guarantee: also run the exhaustive oracle
  Index n_min = 0;                 ///< bounds-figure: first N (default max(M, 2))
  Index n_max = 0;                 ///< bounds-figure: last N
  std::optional<double> slack;     ///< fixed slack instead of the Wilson half-width

  std::string output;  ///< CSV path; empty writes nothing

  /// Throws std::invalid_argument describing the first bad parameter.
  void validate() const;
};

struct ExperimentSummary {
  std::size_t successes = 0;
  std::size_t trials = 0;
  double frequency = 0.0;
  double level = 0.0;
  double slack = 0.0;
  /// True when the level bounds a failure rate (pass iff frequency <= level + slack)
  /// instead of a success rate (pass iff frequency >= level - slack).
  bool upper_level = false;
  /// Deterministic per-trial claims; all must hold.
  bool deterministic_ok = true;
  bool pass = false;
  std::vector<std::string> notes;
};

struct ExperimentReport {
  std::string csv;
  ExperimentSummary summary;
};

/// Runs every trial (in parallel, rows kept in trial order) and evaluates the claim.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// OST trials on a given frame; uses the recovery fields of `config` (K, sigma2, snr or lambda,
/// t, amplitude law and factor, trials, seed, slack).
ExperimentReport run_recovery(const Frame& frame, const ExperimentConfig& config);

/// Multi-line human-readable summary.
std::string format_summary(const ExperimentConfig& config, const ExperimentReport& report);

}  // namespace framecoh
