#pragma once

#include "framecoh/frame.hpp"

#include <optional>
#include <string>
#include <vector>

namespace framecoh {

/// sqrt((N - M) / (M (N - 1))); for N < M the signed (negative, vacuous) value.
double welch_bound(Index m, Index n);

/// 1 - 2 N^(-1/(M-1)). Throws std::invalid_argument for M < 2.
/// N is real-valued so asymptotic grids such as N = a^M can be evaluated.
double complex_bound(Index m, double n);

/// Bound for real frames:
///   cos(pi ((M-1) / (N sqrt(pi)) * Gamma((M-1)/2) / Gamma(M/2))^(1/(M-1))).
/// Throws std::invalid_argument for M < 2.
double real_bound(Index m, double n);

/// 1 - 4/N + 2/N^2, valid for real 3 x N frames.
double bound_3d(Index n);

/// Gamma(k/2) for integer k >= 1 by the recurrence from Gamma(1/2) = sqrt(pi), Gamma(1) = 1.
double half_integer_gamma(unsigned k);
/// log Gamma(k/2), same recurrence, summed in log space.
double log_half_integer_gamma(unsigned k);

/// Largest lower bound on mu that applies to an M x N frame over the given field.
double best_lower_bound(Index m, Index n, ScalarField field);

struct BoundRow {
  Index n = 0;
  double welch = 0.0;
  std::optional<double> complex;  ///< M >= 2
  std::optional<double> real;     ///< M >= 2, real frames
  std::optional<double> three_d;  ///< M == 3, real frames
};

struct BoundTable {
  Index m = 0;
  std::vector<BoundRow> rows;
};

/// Rows for N = n_first..n_last inclusive. Throws on an empty range or N < 2.
BoundTable bound_table(Index m, Index n_first, Index n_last);

/// Header "N,welch,complex,real,three_d"; 12 significant digits; empty field
/// where a bound does not apply.
std::string to_csv(const BoundTable& table);

/// Aligned text; bounds <= 0 are flagged as vacuous.
std::string to_text(const BoundTable& table);

}  // namespace framecoh
