#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string_view>
#include <variant>

namespace framecoh {

using Index = Eigen::Index;
using cd = std::complex<double>;

enum class ScalarField { Real, Complex };

std::string_view to_string(ScalarField field);

/// An M x N matrix whose columns are unit-norm frame elements.
///
/// Real frames hold a real matrix and complex frames a complex one; the
/// coherence routines dispatch on the stored type. Construction rescales
/// every column to unit norm (columns already within 1e-14 of unit norm are
/// kept bit-exact) and rejects exactly-zero columns. Immutable afterwards.
class Frame {
 public:
  static Frame from_real(Eigen::MatrixXd data);
  static Frame from_complex(Eigen::MatrixXcd data);
  static Frame identity(Index m);

  Index rows() const noexcept;
  Index cols() const noexcept;
  ScalarField field() const noexcept;
  bool is_real() const noexcept { return field() == ScalarField::Real; }

  /// Throws std::logic_error if the frame is complex.
  const Eigen::MatrixXd& real_matrix() const;
  /// Throws std::logic_error if the frame is real.
  const Eigen::MatrixXcd& complex_matrix() const;
  Eigen::MatrixXcd to_complex() const;

  cd entry(Index row, Index col) const;
  Eigen::VectorXcd column(Index col) const;

  template <class Visitor>
  decltype(auto) visit(Visitor&& visitor) const {
    return std::visit(std::forward<Visitor>(visitor), data_);
  }

 private:
  explicit Frame(std::variant<Eigen::MatrixXd, Eigen::MatrixXcd> data) : data_(std::move(data)) {}

  std::variant<Eigen::MatrixXd, Eigen::MatrixXcd> data_;
};

/// Largest |norm(f_n) - 1| over columns.
double column_norm_deviation(const Frame& frame);

/// N x N Gram matrix, entry (i, j) = f_i^H f_j.
Eigen::MatrixXcd gram(const Frame& frame);

/// max_{i != j} |<f_i, f_j>|. Computed block-wise without storing the full Gram.
/// Throws std::invalid_argument when N < 2.
double worst_case_coherence(const Frame& frame);

/// (1 / (N - 1)) max_i |sum_{j != i} <f_i, f_j>|, computed in O(MN) from the column sum.
/// Throws std::invalid_argument when N < 2.
double average_coherence(const Frame& frame);

/// Largest singular value by power iteration on the smaller of F F^H and F^H F,
/// stopping once the Rayleigh quotient changes by less than tol (relative).
double spectral_norm(const Frame& frame, double tol = 1e-12);

struct CoherenceReport {
  double mu = 0.0;
  double nu = 0.0;
  double spectral_norm = 0.0;
  bool scp1 = false;  ///< mu <= 1 / (164 ln N)
  bool scp2 = false;  ///< nu <= mu / sqrt(M)
};

bool scp1_holds(double mu, Index n);
bool scp2_holds(double nu, double mu, Index m);

CoherenceReport scp_check(const Frame& frame);

}  // namespace framecoh
