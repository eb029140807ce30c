#include "trient/matcore.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace trient {

Eigen::MatrixXcd kron(const Eigen::Ref<const Eigen::MatrixXcd>& a,
                      const Eigen::Ref<const Eigen::MatrixXcd>& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double hermiticity_deviation(const Eigen::Ref<const Eigen::MatrixXcd>& m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("hermiticity check needs a square matrix, got " +
                            std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::VectorXd hermitian_eigvals(const Eigen::Ref<const Eigen::MatrixXcd>& m,
                                  double tol) {
  const double dev = hermiticity_deviation(m);
  if (dev > tol)
    throw NotHermitian("hermiticity deviation " + std::to_string(dev) +
                       " exceeds tolerance");
  const Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym,
                                                     Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw ConvergenceFailure("eigenvalue iteration did not converge");
  return es.eigenvalues().reverse();
}

Eigen::MatrixXcd psd_sqrt(const Eigen::Ref<const Eigen::MatrixXcd>& m,
                          double tol) {
  const double dev = hermiticity_deviation(m);
  if (dev > tol)
    throw NotHermitian("hermiticity deviation " + std::to_string(dev) +
                       " exceeds tolerance");
  const Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym);
  if (es.info() != Eigen::Success)
    throw ConvergenceFailure("eigenvalue iteration did not converge");
  Eigen::VectorXd ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] < -tol)
      throw NotPSD("eigenvalue " + std::to_string(ev[i]) +
                   " below -tolerance");
    ev[i] = std::sqrt(std::max(ev[i], 0.0));
  }
  return es.eigenvectors() * ev.asDiagonal() *
         es.eigenvectors().adjoint();
}

double trace_norm_hermitian(const Eigen::Ref<const Eigen::MatrixXcd>& m,
                            double tol) {
  return hermitian_eigvals(m, tol).cwiseAbs().sum();
}

Eigen::Matrix4cd partial_transpose_A(const Eigen::Matrix4cd& m) {
  Eigen::Matrix4cd out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int ap = 0; ap < 2; ++ap)
        for (int bp = 0; bp < 2; ++bp)
          out(2 * ap + b, 2 * a + bp) = m(2 * a + b, 2 * ap + bp);
  return out;
}

const Eigen::Matrix4cd& spin_flip_operator() {
  static const Eigen::Matrix4cd yy = [] {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 3) = -1.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    m(3, 0) = -1.0;
    return m;
  }();
  return yy;
}

Eigen::Matrix4cd spin_flip(const Eigen::Matrix4cd& m) {
  const Eigen::Matrix4cd& yy = spin_flip_operator();
  return yy * m.conjugate() * yy;
}

int rank_with_tol(const Eigen::Ref<const Eigen::MatrixXcd>& m, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const Eigen::VectorXd sv = svd.singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > tol) ++r;
  return r;
}

}  // namespace trient
