#include "trient/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "trient/random.hpp"

namespace trient {

namespace {

// Row-major view of the amplitude vector as a 4 x n matrix with row index
// 2a+b and column index c. This is the AB|C unfolding; most operations on
// subsystem C are matrix algebra on it.
using RowMat =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMat> ab_c_view(const TripartitePureState& s) {
  return {s.amplitudes().data(), 4, s.n()};
}

void check_unitary(const Eigen::Ref<const Eigen::MatrixXcd>& u,
                   const char* name) {
  const Eigen::MatrixXcd gram = u.adjoint() * u;
  const double dev =
      (gram - Eigen::MatrixXcd::Identity(u.cols(), u.cols()))
          .cwiseAbs()
          .maxCoeff();
  if (dev > tol::unitarity)
    throw NotUnitary(std::string(name) + " deviates from unitarity by " +
                     std::to_string(dev));
}

}  // namespace

TripartitePureState::TripartitePureState(int n,
                                         const Eigen::VectorXcd& amplitudes)
    : n_(n) {
  if (n < 1)
    throw DimensionMismatch("subsystem C dimension must be >= 1, got " +
                            std::to_string(n));
  if (amplitudes.size() != 4 * static_cast<Eigen::Index>(n))
    throw DimensionMismatch("expected " + std::to_string(4 * n) +
                            " amplitudes, got " +
                            std::to_string(amplitudes.size()));
  if (!amplitudes.allFinite())
    throw InvalidParams("amplitudes must be finite");
  const double norm = amplitudes.norm();
  if (norm == 0.0) throw ZeroVector("state vector has zero norm");
  amps_ = amplitudes / norm;
}

TripartitePureState make_state(int n, const Eigen::VectorXcd& amplitudes) {
  return {n, amplitudes};
}

TwoQubitDensity::TwoQubitDensity(const Eigen::Matrix4cd& m) : m_(m) {
  if (!m.allFinite())
    throw InvalidParams("density matrix entries must be finite");
  const double dev = hermiticity_deviation(m);
  if (dev > tol::hermiticity)
    throw NotHermitian("density matrix hermiticity deviation " +
                       std::to_string(dev));
  const double tr_err = std::abs(m.trace() - Complex(1.0, 0.0));
  if (tr_err > tol::trace_unit)
    throw InvalidParams("density matrix trace deviates from 1 by " +
                        std::to_string(tr_err));
  const Eigen::VectorXd ev = hermitian_eigvals(m, tol::hermiticity);
  if (ev[ev.size() - 1] < -tol::psd_clip)
    throw NotPSD("density matrix eigenvalue " +
                 std::to_string(ev[ev.size() - 1]) + " below -tolerance");
}

TripartitePureState ghz_state(const GHZParams& p) {
  if (!(std::isfinite(p.lambda0) && std::isfinite(p.lambda1) &&
        std::isfinite(p.theta)))
    throw InvalidParams("GHZ parameters must be finite");
  if (!(p.lambda0 > 0.0 && p.lambda0 < 1.0 && p.lambda1 > 0.0 &&
        p.lambda1 < 1.0))
    throw InvalidParams("GHZ coefficients must lie strictly inside (0,1)");
  const double s = p.lambda0 * p.lambda0 + p.lambda1 * p.lambda1;
  if (std::abs(s - 1.0) > tol::param_norm)
    throw InvalidParams("GHZ coefficients must satisfy "
                        "lambda0^2 + lambda1^2 = 1, got sum " +
                        std::to_string(s));
  if (!(p.theta >= 0.0 && p.theta <= std::numbers::pi))
    throw InvalidParams("GHZ phase must lie in [0, pi]");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(8);
  amps[0] = p.lambda0;
  amps[7] = p.lambda1 * std::exp(Complex(0.0, p.theta));
  return {2, amps};
}

TripartitePureState w_state(const WParams& p) {
  if (!(std::isfinite(p.lt0) && std::isfinite(p.lt1) && std::isfinite(p.lt2) &&
        std::isfinite(p.lt3)))
    throw InvalidParams("W parameters must be finite");
  if (!(p.lt0 > 0.0 && p.lt1 > 0.0 && p.lt2 > 0.0))
    throw InvalidParams("W coefficients lt0, lt1, lt2 must be positive");
  if (p.lt3 < 0.0) throw InvalidParams("W coefficient lt3 must be >= 0");
  const double s =
      p.lt0 * p.lt0 + p.lt1 * p.lt1 + p.lt2 * p.lt2 + p.lt3 * p.lt3;
  if (std::abs(s - 1.0) > tol::param_norm)
    throw InvalidParams("W coefficients must have squares summing to 1, "
                        "got sum " +
                        std::to_string(s));
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(8);
  amps[0] = p.lt3;  // |000>
  amps[1] = p.lt0;  // |001>
  amps[2] = p.lt1;  // |010>
  amps[4] = p.lt2;  // |100>
  return {2, amps};
}

TripartitePureState standard_state(StandardState which) {
  switch (which) {
    case StandardState::S223: {
      // (|000> + |011> + |112>) / sqrt(3) in 2 (x) 2 (x) 3.
      Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(12);
      const double a = 1.0 / std::sqrt(3.0);
      amps[0] = a;
      amps[4] = a;
      amps[11] = a;
      return {3, amps};
    }
    case StandardState::S223Prime: {
      // |000> + (|011> + |101> + |112>) / sqrt(2), normalized.
      Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(12);
      const double a = 1.0 / std::sqrt(2.0);
      amps[0] = 1.0;
      amps[4] = a;
      amps[7] = a;
      amps[11] = a;
      return {3, amps};
    }
    case StandardState::S224: {
      // (|000> + |011> + |102> + |113>) / 2 in 2 (x) 2 (x) 4.
      Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(16);
      amps[0] = 0.5;
      amps[5] = 0.5;
      amps[10] = 0.5;
      amps[15] = 0.5;
      return {4, amps};
    }
  }
  throw InvalidParams("unknown standard state");
}

TripartitePureState product_AB_C(const Eigen::Vector4cd& psi_ab,
                                 const Eigen::VectorXcd& phi_c) {
  const Eigen::Index n = phi_c.size();
  if (n < 1) throw DimensionMismatch("factor on C must have dimension >= 1");
  Eigen::VectorXcd amps(4 * n);
  Eigen::Map<RowMat>(amps.data(), 4, n) = psi_ab * phi_c.transpose();
  return {static_cast<int>(n), amps};
}

TripartitePureState product_A_BC(const Eigen::Vector2cd& phi_a,
                                 const Eigen::VectorXcd& psi_bc) {
  if (psi_bc.size() < 2 || psi_bc.size() % 2 != 0)
    throw DimensionMismatch("factor on BC must have even dimension >= 2, "
                            "got " +
                            std::to_string(psi_bc.size()));
  const Eigen::Index n = psi_bc.size() / 2;
  Eigen::VectorXcd amps(4 * n);
  amps.head(2 * n) = phi_a[0] * psi_bc;
  amps.tail(2 * n) = phi_a[1] * psi_bc;
  return {static_cast<int>(n), amps};
}

TripartitePureState random_haar_pure(int n, std::uint64_t seed) {
  if (n < 1)
    throw DimensionMismatch("subsystem C dimension must be >= 1, got " +
                            std::to_string(n));
  GaussianRng rng(seed);
  return {n, haar_state_vector(rng, 4 * static_cast<Eigen::Index>(n))};
}

TripartitePureState apply_local_unitaries(const TripartitePureState& s,
                                          const LocalUnitaryTriple& u) {
  const int n = s.n();
  if (u.c.rows() != n || u.c.cols() != n)
    throw DimensionMismatch("unitary on C must be " + std::to_string(n) + "x" +
                            std::to_string(n) + ", got " +
                            std::to_string(u.c.rows()) + "x" +
                            std::to_string(u.c.cols()));
  check_unitary(u.a, "unitary on A");
  check_unitary(u.b, "unitary on B");
  check_unitary(u.c, "unitary on C");
  const Eigen::Matrix4cd kab = kron(u.a, u.b);
  Eigen::VectorXcd amps(4 * static_cast<Eigen::Index>(n));
  Eigen::Map<RowMat>(amps.data(), 4, n) =
      kab * ab_c_view(s) * u.c.transpose();
  return {n, amps};
}

TwoQubitDensity reduced_AB(const TripartitePureState& s) {
  const auto t = ab_c_view(s);
  const Eigen::Matrix4cd rho = t * t.adjoint();
  return TwoQubitDensity(rho);
}

std::array<int, 3> local_ranks(const TripartitePureState& s, double tol) {
  const int n = s.n();
  // A unfolding: rows indexed by a, columns by (b,c); contiguous in memory.
  Eigen::Map<const RowMat> ma(s.amplitudes().data(), 2, 2 * n);
  Eigen::MatrixXcd mb(2, 2 * n);
  Eigen::MatrixXcd mc(n, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < n; ++c) {
        const Complex v = s.amp(a, b, c);
        mb(b, a * n + c) = v;
        mc(c, 2 * a + b) = v;
      }
  return {rank_with_tol(ma, tol), rank_with_tol(mb, tol),
          rank_with_tol(mc, tol)};
}

std::pair<double, std::optional<TripartitePureState>> apply_kraus_branch(
    const TripartitePureState& s, const Eigen::MatrixXcd& m) {
  if (m.cols() != s.n())
    throw DimensionMismatch("Kraus operator acts on dimension " +
                            std::to_string(m.cols()) + ", state has n = " +
                            std::to_string(s.n()));
  if (m.rows() < 1)
    throw DimensionMismatch("Kraus operator must have at least one row");
  const Eigen::Index np = m.rows();
  RowMat tp = ab_c_view(s) * m.transpose();
  const double p = tp.squaredNorm();
  if (p < tol::null_branch) return {p, std::nullopt};
  const Eigen::Map<const Eigen::VectorXcd> flat(tp.data(), 4 * np);
  return {p, TripartitePureState(static_cast<int>(np), flat)};
}

}  // namespace trient
