#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "trient/matcore.hpp"

namespace trient {

// Deterministic Gaussian source. Uniforms come straight from the mt19937_64
// bit stream and normals from Box-Muller, so the draw sequence for a given
// seed is identical across platforms and reruns (std::normal_distribution
// would not be).
class GaussianRng {
 public:
  explicit GaussianRng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1]; safe as a log argument.
  double uniform_open() {
    return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
  }

  double normal();

  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

 private:
  std::mt19937_64 gen_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

// Matrix of independent standard complex Gaussians.
Eigen::MatrixXcd ginibre(GaussianRng& rng, Eigen::Index rows,
                         Eigen::Index cols);

// Haar-uniform unit vector in C^dim.
Eigen::VectorXcd haar_state_vector(GaussianRng& rng, Eigen::Index dim);

// Haar-distributed unitary via QR of a Ginibre matrix with the R-diagonal
// phase fix.
Eigen::MatrixXcd haar_unitary(GaussianRng& rng, Eigen::Index dim);

// Haar-distributed isometry: rows x cols with orthonormal columns
// (u^dagger u = I), rows >= cols.
Eigen::MatrixXcd haar_isometry(GaussianRng& rng, Eigen::Index rows,
                               Eigen::Index cols);

}  // namespace trient
