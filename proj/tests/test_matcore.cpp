#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "trient/matcore.hpp"
#include "trient/random.hpp"

using namespace trient;
using Eigen::Matrix4cd;
using Eigen::MatrixXcd;
using Eigen::VectorXd;

namespace {

const Complex I(0.0, 1.0);

Matrix4cd bell_rho() {
  // (|00> + |11>)/sqrt(2)
  Eigen::Vector4cd v;
  v << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
  return v * v.adjoint();
}

}  // namespace

TEST_CASE("dagger is the conjugate transpose") {
  MatrixXcd m(2, 3);
  m << 1.0 + I, 2.0, 3.0 - 2.0 * I, 0.0, -I, 1.0;
  const MatrixXcd d = dagger(m);
  REQUIRE(d.rows() == 3);
  REQUIRE(d.cols() == 2);
  CHECK(d(0, 0) == std::conj(m(0, 0)));
  CHECK(d(2, 1) == std::conj(m(1, 2)));
  CHECK((dagger(d) - m).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kron follows the left-major convention") {
  MatrixXcd a(2, 2), b(2, 2);
  a << 1.0, 2.0, 3.0, 4.0;
  b << 0.0, 1.0, 1.0, 0.0;
  const MatrixXcd k = kron(a, b);
  REQUIRE(k.rows() == 4);
  // block (i,j) is a(i,j) * b
  CHECK(k(0, 1) == Complex(1.0));
  CHECK(k(0, 3) == Complex(2.0));
  CHECK(k(3, 2) == Complex(4.0));
  CHECK(k(1, 1) == Complex(0.0));

  // (a (x) b)(x (x) y) = (a x) (x) (b y)
  Eigen::Vector2cd x(1.0, 2.0), y(0.5, -1.0);
  Eigen::Vector4cd xy;
  xy << x[0] * y[0], x[0] * y[1], x[1] * y[0], x[1] * y[1];
  CHECK((k * xy - kron(a * x, b * y)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("hermitian_eigvals sorts descending") {
  MatrixXcd m(2, 2);
  m << 2.0, 1.0 + I, 1.0 - I, 3.0;
  const VectorXd ev = hermitian_eigvals(m);
  REQUIRE(ev.size() == 2);
  // trace 5, det 4 -> eigenvalues 4 and 1
  CHECK(ev[0] == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eigvals rejects bad input") {
  MatrixXcd m(2, 2);
  m << 0.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(hermitian_eigvals(m), NotHermitian);
  CHECK_THROWS_AS(hermitian_eigvals(MatrixXcd::Zero(2, 3)),
                  DimensionMismatch);
  // a deviation inside the tolerance is symmetrized away
  MatrixXcd almost(2, 2);
  almost << 1.0, 0.5 + 1e-11 * I, 0.5 - 1e-11 * I, 1.0;
  almost(0, 1) += 5e-10;
  CHECK_NOTHROW(hermitian_eigvals(almost));
}

TEST_CASE("psd_sqrt squares back to the input") {
  MatrixXcd m(2, 2);
  m << 2.0, 1.0, 1.0, 2.0;
  const MatrixXcd r = psd_sqrt(m);
  CHECK((r * r - m).cwiseAbs().maxCoeff() < 1e-12);
  const double s3 = std::sqrt(3.0);
  CHECK(std::abs(r(0, 0) - Complex((s3 + 1.0) / 2.0)) < 1e-12);
  CHECK(std::abs(r(0, 1) - Complex((s3 - 1.0) / 2.0)) < 1e-12);
}

TEST_CASE("psd_sqrt clips tiny negatives and rejects real ones") {
  Eigen::MatrixXcd tiny = Eigen::Vector2d(1.0, -5e-10)
                              .cast<Complex>()
                              .asDiagonal()
                              .toDenseMatrix();
  const MatrixXcd r = psd_sqrt(tiny);
  CHECK(std::abs(r(1, 1)) == 0.0);
  CHECK(std::abs(r(0, 0) - Complex(1.0)) < 1e-14);

  Eigen::MatrixXcd bad = Eigen::Vector2d(1.0, -1e-6)
                             .cast<Complex>()
                             .asDiagonal()
                             .toDenseMatrix();
  CHECK_THROWS_AS(psd_sqrt(bad), NotPSD);
}

TEST_CASE("trace_norm_hermitian sums absolute eigenvalues") {
  Eigen::MatrixXcd m = Eigen::Vector3d(1.0, -2.0, 3.0)
                           .cast<Complex>()
                           .asDiagonal()
                           .toDenseMatrix();
  CHECK(trace_norm_hermitian(m) == doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("partial_transpose_A on the Bell projector") {
  const Matrix4cd rho = bell_rho();
  const Matrix4cd pt = partial_transpose_A(rho);
  // coherences move from (00,11) to (10,01)
  CHECK(std::abs(pt(0, 3)) < 1e-15);
  CHECK(std::abs(pt(2, 1) - Complex(0.5)) < 1e-15);
  CHECK(std::abs(pt(1, 2) - Complex(0.5)) < 1e-15);
  const VectorXd ev = hermitian_eigvals(pt);
  CHECK(ev[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ev[3] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(trace_norm_hermitian(pt) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("partial_transpose_A is an involution") {
  GaussianRng rng(7);
  const MatrixXcd g = ginibre(rng, 4, 4);
  const Matrix4cd m = g;
  CHECK((partial_transpose_A(partial_transpose_A(m)) - m)
            .cwiseAbs()
            .maxCoeff() == 0.0);
}

TEST_CASE("spin_flip_operator entries") {
  const Matrix4cd& yy = spin_flip_operator();
  CHECK(yy(0, 3) == Complex(-1.0));
  CHECK(yy(1, 2) == Complex(1.0));
  CHECK(yy(2, 1) == Complex(1.0));
  CHECK(yy(3, 0) == Complex(-1.0));
  CHECK(yy.cwiseAbs().sum() == doctest::Approx(4.0));
  CHECK((yy * yy - Matrix4cd::Identity()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("spin_flip fixes the Bell projector") {
  const Matrix4cd rho = bell_rho();
  CHECK((spin_flip(rho) - rho).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("rank_with_tol separates signal from noise") {
  Eigen::MatrixXcd m = Eigen::Vector3d(1.0, 1e-9, 0.0)
                           .cast<Complex>()
                           .asDiagonal()
                           .toDenseMatrix();
  CHECK(rank_with_tol(m) == 1);
  CHECK(rank_with_tol(m, 1e-10) == 2);
  CHECK(rank_with_tol(MatrixXcd::Zero(3, 3)) == 0);
}

TEST_CASE("GaussianRng is deterministic and well scaled") {
  GaussianRng a(123), b(123);
  for (int i = 0; i < 64; ++i) {
    CHECK(a.uniform() == b.uniform());
    CHECK(a.normal() == b.normal());
  }
  GaussianRng c(123), d(124);
  bool differ = false;
  for (int i = 0; i < 8; ++i) differ |= (c.uniform() != d.uniform());
  CHECK(differ);

  GaussianRng rng(5);
  double sum = 0.0, sq = 0.0;
  const int m = 20000;
  for (int i = 0; i < m; ++i) {
    const double x = rng.normal();
    sum += x;
    sq += x * x;
  }
  CHECK(std::abs(sum / m) < 0.03);
  CHECK(sq / m == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("haar_unitary is unitary and seed-stable") {
  GaussianRng rng(11);
  const MatrixXcd u = haar_unitary(rng, 3);
  CHECK((u.adjoint() * u - MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() <
        1e-13);
  GaussianRng rng2(11);
  const MatrixXcd u2 = haar_unitary(rng2, 3);
  CHECK((u - u2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("haar_isometry has orthonormal columns") {
  GaussianRng rng(13);
  const MatrixXcd v = haar_isometry(rng, 6, 2);
  CHECK((v.adjoint() * v - MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-13);
  CHECK_THROWS_AS(haar_isometry(rng, 2, 3), DimensionMismatch);
}

TEST_CASE("haar sampling is not biased toward a basis") {
  GaussianRng rng(17);
  double mean = 0.0;
  const int m = 400;
  for (int i = 0; i < m; ++i)
    mean += std::norm(haar_unitary(rng, 2)(0, 0));
  mean /= m;
  // |u00|^2 of a Haar 2x2 unitary is uniform on [0,1]
  CHECK(mean == doctest::Approx(0.5).epsilon(0.2));
}

TEST_CASE("haar_state_vector is normalized") {
  GaussianRng rng(19);
  CHECK(haar_state_vector(rng, 8).norm() ==
        doctest::Approx(1.0).epsilon(1e-14));
}
