#pragma once

#include <complex>

#include <Eigen/Dense>

#include "trient/errors.hpp"
#include "trient/tolerances.hpp"

namespace trient {

using Complex = std::complex<double>;

// Conjugate transpose.
inline Eigen::MatrixXcd dagger(const Eigen::Ref<const Eigen::MatrixXcd>& m) {
  return m.adjoint();
}

// Kronecker product, left factor major: out((i,k),(j,l)) = a(i,j) * b(k,l).
Eigen::MatrixXcd kron(const Eigen::Ref<const Eigen::MatrixXcd>& a,
                      const Eigen::Ref<const Eigen::MatrixXcd>& b);

// Largest entry of |m - m^dagger| for a square matrix.
double hermiticity_deviation(const Eigen::Ref<const Eigen::MatrixXcd>& m);

// Real eigenvalues of a Hermitian matrix, sorted descending. The input is
// symmetrized as (m + m^dagger)/2 before decomposition; a deviation beyond
// tol throws NotHermitian, solver failure throws ConvergenceFailure.
Eigen::VectorXd hermitian_eigvals(const Eigen::Ref<const Eigen::MatrixXcd>& m,
                                  double tol = tol::hermiticity);

// Principal square root of a PSD Hermitian matrix. Eigenvalues in [-tol, 0)
// are clipped to 0; anything below -tol throws NotPSD.
Eigen::MatrixXcd psd_sqrt(const Eigen::Ref<const Eigen::MatrixXcd>& m,
                          double tol = tol::psd_clip);

// Trace norm (sum of |eigenvalues|) of a Hermitian matrix.
double trace_norm_hermitian(const Eigen::Ref<const Eigen::MatrixXcd>& m,
                            double tol = tol::hermiticity);

// Partial transpose over the first qubit of a two-qubit matrix in the
// 2a+b product basis: out((a',b),(a,b')) = m((a,b),(a',b')).
// An involution; applying it twice returns the input exactly.
Eigen::Matrix4cd partial_transpose_A(const Eigen::Matrix4cd& m);

// The two-qubit spin-flip operator sigma_y (x) sigma_y (real, symmetric,
// and its own inverse).
const Eigen::Matrix4cd& spin_flip_operator();

// Spin-flipped matrix (sigma_y (x) sigma_y) * conj(m) * (sigma_y (x) sigma_y).
Eigen::Matrix4cd spin_flip(const Eigen::Matrix4cd& m);

// Number of singular values strictly above tol.
int rank_with_tol(const Eigen::Ref<const Eigen::MatrixXcd>& m,
                  double tol = tol::rank);

}  // namespace trient
