#include "framecoh/frame.hpp"

#include "framecoh/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace framecoh {

namespace {

constexpr double kKeepExactTol = 1e-14;
constexpr Index kGramBlock = 256;

template <class Matrix>
void normalize_columns(Matrix& data) {
  for (Index j = 0; j < data.cols(); ++j) {
    const double norm = data.col(j).norm();
    if (norm == 0.0) {
      throw std::invalid_argument("frame column " + std::to_string(j) + " is identically zero");
    }
    if (!std::isfinite(norm)) {
      throw std::invalid_argument("frame column " + std::to_string(j) + " has non-finite entries");
    }
    if (std::abs(norm - 1.0) > kKeepExactTol) data.col(j) /= norm;
  }
}

void require_pairs(const Frame& frame) {
  if (frame.cols() < 2) throw std::invalid_argument("coherence undefined for a single vector");
}

template <class Matrix>
double max_offdiag_modulus(const Matrix& f) {
  const Index n = f.cols();
  double best = 0.0;
  for (Index start = 0; start < n; start += kGramBlock) {
    const Index width = std::min(kGramBlock, n - start);
    const auto block = (f.middleCols(start, width).adjoint() * f.rightCols(n - start)).eval();
    for (Index j = 0; j < block.cols(); ++j) {
      for (Index i = 0; i < width; ++i) {
        if (i == j) continue;  // global column index equal only on this diagonal
        if (j < i) continue;   // lower part of the leading square is a mirror
        best = std::max(best, std::abs(block(i, j)));
      }
    }
  }
  return best;
}

template <class Matrix>
double max_row_sum_modulus(const Matrix& f) {
  using Vector = Eigen::Matrix<typename Matrix::Scalar, Eigen::Dynamic, 1>;
  const Vector total = f.rowwise().sum();
  const Vector proxy = f.adjoint() * total;
  double best = 0.0;
  for (Index i = 0; i < f.cols(); ++i) {
    best = std::max(best, std::abs(proxy(i) - f.col(i).squaredNorm()));
  }
  return best;
}

template <class Matrix>
double largest_eigenvalue_psd(const Matrix& a, double tol) {
  using Vector = Eigen::Matrix<typename Matrix::Scalar, Eigen::Dynamic, 1>;
  const Index n = a.rows();
  CounterRng rng(hash64(0x5eed5eedULL, static_cast<std::uint64_t>(n)));
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = typename Matrix::Scalar(rng.normal());
  v.normalize();

  constexpr int kMaxIterations = 200000;
  double theta = 0.0;
  for (int it = 0; it < kMaxIterations; ++it) {
    Vector w = a * v;
    const double next = std::real(v.dot(w));
    const double wn = w.norm();
    if (wn == 0.0) return 0.0;
    v = w / wn;
    if (it > 0 && std::abs(next - theta) <= tol * std::abs(next)) return next;
    theta = next;
  }
  return theta;
}

}  // namespace

std::string_view to_string(ScalarField field) {
  return field == ScalarField::Real ? "real" : "complex";
}

Frame Frame::from_real(Eigen::MatrixXd data) {
  if (data.rows() < 1 || data.cols() < 1) throw std::invalid_argument("frame must be at least 1x1");
  normalize_columns(data);
  return Frame(std::move(data));
}

Frame Frame::from_complex(Eigen::MatrixXcd data) {
  if (data.rows() < 1 || data.cols() < 1) throw std::invalid_argument("frame must be at least 1x1");
  normalize_columns(data);
  return Frame(std::move(data));
}

Frame Frame::identity(Index m) {
  return from_real(Eigen::MatrixXd::Identity(m, m));
}

Index Frame::rows() const noexcept {
  return visit([](const auto& d) { return d.rows(); });
}

Index Frame::cols() const noexcept {
  return visit([](const auto& d) { return d.cols(); });
}

ScalarField Frame::field() const noexcept {
  return data_.index() == 0 ? ScalarField::Real : ScalarField::Complex;
}

const Eigen::MatrixXd& Frame::real_matrix() const {
  if (!is_real()) throw std::logic_error("real_matrix() on a complex frame");
  return std::get<0>(data_);
}

const Eigen::MatrixXcd& Frame::complex_matrix() const {
  if (is_real()) throw std::logic_error("complex_matrix() on a real frame");
  return std::get<1>(data_);
}

Eigen::MatrixXcd Frame::to_complex() const {
  return visit([](const auto& d) -> Eigen::MatrixXcd { return d.template cast<cd>(); });
}

cd Frame::entry(Index row, Index col) const {
  return visit([&](const auto& d) { return cd(d(row, col)); });
}

Eigen::VectorXcd Frame::column(Index col) const {
  return visit([&](const auto& d) -> Eigen::VectorXcd { return d.col(col).template cast<cd>(); });
}

double column_norm_deviation(const Frame& frame) {
  return frame.visit([](const auto& d) {
    double worst = 0.0;
    for (Index j = 0; j < d.cols(); ++j) worst = std::max(worst, std::abs(d.col(j).norm() - 1.0));
    return worst;
  });
}

Eigen::MatrixXcd gram(const Frame& frame) {
  return frame.visit([](const auto& d) -> Eigen::MatrixXcd {
    return (d.adjoint() * d).template cast<cd>();
  });
}

double worst_case_coherence(const Frame& frame) {
  require_pairs(frame);
  return frame.visit([](const auto& d) { return max_offdiag_modulus(d); });
}

double average_coherence(const Frame& frame) {
  require_pairs(frame);
  const double sum = frame.visit([](const auto& d) { return max_row_sum_modulus(d); });
  return sum / static_cast<double>(frame.cols() - 1);
}

double spectral_norm(const Frame& frame, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("spectral_norm: tol must be positive");
  return frame.visit([tol](const auto& d) {
    using Matrix = std::decay_t<decltype(d)>;
    const bool wide = d.rows() <= d.cols();
    const Index size = wide ? d.rows() : d.cols();
    Matrix small = Matrix::Zero(size, size);
    if (wide) {
      small.template selfadjointView<Eigen::Lower>().rankUpdate(d);
    } else {
      small.template selfadjointView<Eigen::Lower>().rankUpdate(d.adjoint());
    }
    small.template triangularView<Eigen::StrictlyUpper>() = small.adjoint();
    return std::sqrt(std::max(0.0, largest_eigenvalue_psd(small, tol)));
  });
}

bool scp1_holds(double mu, Index n) {
  return mu <= 1.0 / (164.0 * std::log(static_cast<double>(n)));
}

bool scp2_holds(double nu, double mu, Index m) {
  return nu <= mu / std::sqrt(static_cast<double>(m));
}

CoherenceReport scp_check(const Frame& frame) {
  CoherenceReport report;
  report.mu = worst_case_coherence(frame);
  report.nu = average_coherence(frame);
  report.spectral_norm = spectral_norm(frame);
  report.scp1 = scp1_holds(report.mu, frame.cols());
  report.scp2 = scp2_holds(report.nu, report.mu, frame.rows());
  return report;
}

}  // namespace framecoh
