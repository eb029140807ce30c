#include "trient/measures.hpp"

#include <cmath>
#include <string>

namespace trient {

namespace {

// Differences like coa^2 - C^2 are non-negative by theory; values inside
// the snap window are accumulated roundoff and become exact zeros. Anything
// further below zero means the pipeline itself is broken.
double snap_nonnegative(double x, const char* what) {
  if (std::abs(x) <= tol::zero_snap) return 0.0;
  if (x < 0.0)
    throw InternalConsistency(std::string(what) + " came out " +
                              std::to_string(x) +
                              ", beyond the zero-snap window");
  return x;
}

double clip_eta(double x) {
  if (x >= 0.0) return x;
  if (x >= -tol::eta_window) return 0.0;
  throw InternalConsistency("eta came out " + std::to_string(x) +
                            ", beyond the clip window");
}

MeasureReport report_from(const Eigen::Vector4d& lambdas, double neg) {
  const double c = std::max(
      0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
  const double ca = lambdas.sum();
  MeasureReport r;
  r.concurrence = c;
  r.negativity = neg;
  r.coa = ca;
  r.tau = std::sqrt(snap_nonnegative(ca * ca - c * c, "coa^2 - C^2"));
  r.chi = std::sqrt(snap_nonnegative(ca * ca - neg * neg, "coa^2 - N^2"));
  r.varpi = snap_nonnegative(c * c - neg * neg, "C^2 - N^2");
  r.eta = clip_eta(c - neg);
  return r;
}

}  // namespace

Eigen::Vector4d wootters_lambdas(const TwoQubitDensity& rho) {
  const Eigen::Matrix4cd rt = psd_sqrt(rho.matrix());
  const Eigen::Matrix4cd h = rt * spin_flip(rho.matrix()) * rt;
  const Eigen::VectorXd ev = hermitian_eigvals(h);
  Eigen::Vector4d out;
  for (int i = 0; i < 4; ++i) {
    if (ev[i] < -tol::psd_clip)
      throw InternalConsistency(
          "sqrt(rho)*rho_tilde*sqrt(rho) has eigenvalue " +
          std::to_string(ev[i]));
    out[i] = (ev[i] <= tol::lambda_floor) ? 0.0 : std::sqrt(ev[i]);
  }
  return out;
}

double concurrence(const TwoQubitDensity& rho) {
  const Eigen::Vector4d l = wootters_lambdas(rho);
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double negativity(const TwoQubitDensity& rho) {
  const double tn = trace_norm_hermitian(partial_transpose_A(rho.matrix()));
  return std::max(0.0, tn - 1.0);
}

double coa(const TwoQubitDensity& rho) { return wootters_lambdas(rho).sum(); }

MeasureReport full_report(const TwoQubitDensity& rho) {
  return report_from(wootters_lambdas(rho), negativity(rho));
}

MeasureReport full_report(const TripartitePureState& s) {
  return full_report(reduced_AB(s));
}

double tau(const TripartitePureState& s) { return full_report(s).tau; }
double chi(const TripartitePureState& s) { return full_report(s).chi; }
double varpi(const TripartitePureState& s) { return full_report(s).varpi; }
double eta(const TripartitePureState& s) { return full_report(s).eta; }

double pure_concurrence(const Eigen::Vector4cd& psi) {
  return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

double average_concurrence(const Decomposition& d) {
  if (d.weights.size() != d.members.size())
    throw InconsistentDecomposition(
        "weights and members differ in length: " +
        std::to_string(d.weights.size()) + " vs " +
        std::to_string(d.members.size()));
  if (d.weights.empty())
    throw InconsistentDecomposition("decomposition is empty");
  double wsum = 0.0;
  for (double w : d.weights) {
    if (!(w >= 0.0))
      throw InconsistentDecomposition("negative weight " + std::to_string(w));
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > tol::weight_sum)
    throw InconsistentDecomposition("weights sum to " + std::to_string(wsum));
  Eigen::Matrix4cd mix = Eigen::Matrix4cd::Zero();
  double avg = 0.0;
  for (std::size_t i = 0; i < d.members.size(); ++i) {
    const Eigen::Vector4cd& phi = d.members[i];
    const double nrm = phi.norm();
    if (std::abs(nrm - 1.0) > 1e-9)
      throw NotNormalized("member " + std::to_string(i) + " has norm " +
                          std::to_string(nrm));
    mix += d.weights[i] * (phi * phi.adjoint());
    avg += d.weights[i] * pure_concurrence(phi);
  }
  const double dev = (mix - d.target).cwiseAbs().maxCoeff();
  if (dev > tol::reconstruction)
    throw InconsistentDecomposition(
        "ensemble reconstructs the target only to " + std::to_string(dev));
  return avg;
}

}  // namespace trient
