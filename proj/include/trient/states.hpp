#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include <Eigen/Dense>

#include "trient/matcore.hpp"
#include "trient/tolerances.hpp"

namespace trient {

// Pure state of a 2 (x) 2 (x) n system. Amplitudes are stored flat with
// index a*(2n) + b*n + c for basis ket |a b c>, a,b in {0,1}, c in
// {0,...,n-1}. The constructor rejects bad shapes and non-finite entries
// and normalizes the vector, so every instance holds a unit vector.
class TripartitePureState {
 public:
  TripartitePureState(int n, const Eigen::VectorXcd& amplitudes);

  int n() const { return n_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }

  Eigen::Index index(int a, int b, int c) const {
    return static_cast<Eigen::Index>(a) * 2 * n_ + b * n_ + c;
  }
  Complex amp(int a, int b, int c) const { return amps_[index(a, b, c)]; }

 private:
  int n_;
  Eigen::VectorXcd amps_;
};

TripartitePureState make_state(int n, const Eigen::VectorXcd& amplitudes);

// Two-qubit density matrix in the product basis |00>,|01>,|10>,|11>
// (row/column index 2a+b). Construction enforces hermiticity, unit trace,
// and positivity up to the shared tolerance windows.
class TwoQubitDensity {
 public:
  explicit TwoQubitDensity(const Eigen::Matrix4cd& m);

  const Eigen::Matrix4cd& matrix() const { return m_; }

 private:
  Eigen::Matrix4cd m_;
};

// Generalized GHZ family: lambda0 |000> + lambda1 e^{i theta} |111>.
// Constraints: lambda0, lambda1 in (0,1), lambda0^2 + lambda1^2 = 1,
// theta in [0, pi].
struct GHZParams {
  double lambda0;
  double lambda1;
  double theta;
};

// Generalized W family: lt0 |001> + lt1 |010> + lt2 |100> + lt3 |000>.
// Constraints: lt0, lt1, lt2 > 0, lt3 >= 0, squares summing to 1.
struct WParams {
  double lt0;
  double lt1;
  double lt2;
  double lt3;
};

struct LocalUnitaryTriple {
  Eigen::Matrix2cd a;
  Eigen::Matrix2cd b;
  Eigen::MatrixXcd c;
};

TripartitePureState ghz_state(const GHZParams& p);
TripartitePureState w_state(const WParams& p);

// Named rank-signature witnesses. S223 and S223Prime live in 2 (x) 2 (x) 3,
// S224 in 2 (x) 2 (x) 4; all three have maximally mixed qubits A and B.
enum class StandardState { S223, S223Prime, S224 };
TripartitePureState standard_state(StandardState which);

// |psi_AB> (x) |phi_C>, separable across the AB|C cut.
TripartitePureState product_AB_C(const Eigen::Vector4cd& psi_ab,
                                 const Eigen::VectorXcd& phi_c);

// |phi_A> (x) |psi_BC>, separable across the A|BC cut.
TripartitePureState product_A_BC(const Eigen::Vector2cd& phi_a,
                                 const Eigen::VectorXcd& psi_bc);

// Haar-uniform pure state in 2 (x) 2 (x) n; deterministic for a fixed seed.
TripartitePureState random_haar_pure(int n, std::uint64_t seed);

// (u_A (x) u_B (x) u_C) |state>. Checks shapes and unitarity.
TripartitePureState apply_local_unitaries(const TripartitePureState& s,
                                          const LocalUnitaryTriple& u);

// Trace out subsystem C.
TwoQubitDensity reduced_AB(const TripartitePureState& s);

// Ranks of the three single-subsystem reductions, (rank_A, rank_B, rank_C),
// computed from singular values of the amplitude unfoldings.
std::array<int, 3> local_ranks(const TripartitePureState& s,
                               double tol = tol::rank);

// One Kraus branch m (n' x n) acting on subsystem C. Returns the branch
// probability and the renormalized post-branch state, or nullopt when the
// probability is below the null-branch cutoff.
std::pair<double, std::optional<TripartitePureState>> apply_kraus_branch(
    const TripartitePureState& s, const Eigen::MatrixXcd& m);

}  // namespace trient
