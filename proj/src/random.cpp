#include "trient/random.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/QR>

namespace trient {

double GaussianRng::normal() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_;
  }
  const double u1 = uniform_open();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(phi);
  have_cached_ = true;
  return r * std::cos(phi);
}

Eigen::MatrixXcd ginibre(GaussianRng& rng, Eigen::Index rows,
                         Eigen::Index cols) {
  Eigen::MatrixXcd z(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) z(i, j) = rng.complex_normal();
  return z;
}

Eigen::VectorXcd haar_state_vector(GaussianRng& rng, Eigen::Index dim) {
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = rng.complex_normal();
  const double n = v.norm();
  if (n == 0.0) throw ZeroVector("degenerate Gaussian draw");
  return v / n;
}

Eigen::MatrixXcd haar_isometry(GaussianRng& rng, Eigen::Index rows,
                               Eigen::Index cols) {
  if (rows < cols)
    throw DimensionMismatch("isometry needs rows >= cols, got " +
                            std::to_string(rows) + "x" + std::to_string(cols));
  const Eigen::MatrixXcd z = ginibre(rng, rows, cols);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q =
      qr.householderQ() * Eigen::MatrixXcd::Identity(rows, cols);
  const Eigen::MatrixXcd r = qr.matrixQR();
  // Fix the residual diagonal phase freedom so the result is Haar, not just
  // column-orthonormal.
  for (Eigen::Index j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0.0) ? d / a : Complex(1.0, 0.0);
  }
  return q;
}

Eigen::MatrixXcd haar_unitary(GaussianRng& rng, Eigen::Index dim) {
  return haar_isometry(rng, dim, dim);
}

}  // namespace trient
