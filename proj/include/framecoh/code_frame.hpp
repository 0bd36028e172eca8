#pragma once

#include "framecoh/constructions.hpp"
#include "framecoh/gf2m.hpp"

#include <cstdint>
#include <vector>

namespace framecoh {

/// Matrix-free view of the code-based frame.
///
/// Columns f_a, f_b satisfy f_a .* f_b = 2^(-m/2) f_(a xor b), so every
/// inner product is a character sum of a quadratic form over GF(2)^m:
///   <f_a, f_b> = 2^(-m) S(a xor b),  S(g) = sum_x (-1)^Q_g(x),
///   Q_g(x) = Tr(g_0 x + sum_i g_i x^(2^i + 1)).
/// S is evaluated exactly by splitting off hyperbolic planes of the polar
/// form, so frames far beyond memory (e.g. m = 29) can still be probed.
class CodeFrameOperator {
 public:
  explicit CodeFrameOperator(const CodeFrameSpec& spec);

  const CodeFrameSpec& spec() const noexcept { return spec_; }
  const Gf2m& field() const noexcept { return field_; }
  std::uint64_t rows() const noexcept { return spec_.rows(); }
  std::uint64_t cols() const noexcept { return spec_.cols(); }
  double entry_magnitude() const noexcept { return entry_magnitude_; }

  /// Q_g(x) in {0, 1}.
  unsigned quadratic_form(std::uint64_t gamma, Gf2mElement x) const noexcept;

  /// +-1 sign of entry (row x, column col).
  int sign(std::uint64_t row, std::uint64_t col) const noexcept;
  double entry(std::uint64_t row, std::uint64_t col) const noexcept { return sign(row, col) * entry_magnitude_; }

  /// Mask whose parity against a column index gives the row's sign bit.
  std::uint64_t row_mask(std::uint64_t row) const noexcept;

  /// S(gamma), exact.
  std::int64_t character_sum(std::uint64_t gamma) const;

  /// <f_a, f_b> = 2^(-m) S(a xor b).
  double inner_product(std::uint64_t a, std::uint64_t b) const;

  /// max_{g != 0} |S(g)| / 2^m. Enumerates every g; guarded by kMaxCodeFrameColumns.
  double worst_case_coherence() const;

  /// (N - 2^m) / (2^m (N - 1)): the off-diagonal Gram row sum is the same for
  /// every column because sum_g S(g) = N.
  double average_coherence() const;

 private:
  /// Rows of the polar form B_g(u, v) = Q_g(u + v) + Q_g(u) + Q_g(v):
  /// B_g(z^i, v) == parity(rows[i] & v).
  std::vector<std::uint64_t> polar_rows(std::uint64_t gamma) const;

  CodeFrameSpec spec_;
  Gf2m field_;
  double entry_magnitude_;
  std::vector<std::uint64_t> trace_forms_;               // L(z^j)
  std::vector<std::vector<std::uint64_t>> frobenius_;    // frobenius_[k][j] = (z^j)^(2^k)
};

}  // namespace framecoh
