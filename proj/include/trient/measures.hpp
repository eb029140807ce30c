#pragma once

#include <vector>

#include <Eigen/Dense>

#include "trient/states.hpp"

namespace trient {

// The seven quantities reported for a tripartite pure state. All are
// functions of the two-qubit reduction rho_AB:
//   concurrence  Wootters concurrence C(rho_AB)
//   negativity   N(rho_AB) across the A|B cut
//   coa          concurrence of assistance, sum of the Wootters lambdas
//   tau          sqrt(coa^2 - C^2)
//   chi          sqrt(coa^2 - N^2)
//   varpi        C^2 - N^2
//   eta          C - N
struct MeasureReport {
  double concurrence;
  double negativity;
  double coa;
  double tau;
  double chi;
  double varpi;
  double eta;
};

// Square roots of the eigenvalues of sqrt(rho) * rho_tilde * sqrt(rho),
// sorted descending, with rank-noise eigenvalues floored to exact zeros.
Eigen::Vector4d wootters_lambdas(const TwoQubitDensity& rho);

double concurrence(const TwoQubitDensity& rho);
double negativity(const TwoQubitDensity& rho);
double coa(const TwoQubitDensity& rho);

double tau(const TripartitePureState& s);
double chi(const TripartitePureState& s);
double varpi(const TripartitePureState& s);
double eta(const TripartitePureState& s);

// All seven measures from one reduction / one lambda extraction, so the
// identities among them hold to roundoff rather than to solver jitter.
MeasureReport full_report(const TwoQubitDensity& rho);
MeasureReport full_report(const TripartitePureState& s);

// Concurrence of a pure two-qubit state in the 2a+b basis:
// 2 |psi_00 psi_11 - psi_01 psi_10|.
double pure_concurrence(const Eigen::Vector4cd& psi);

// Pure-state ensemble {p_i, |phi_i>} claimed to average to `target`.
struct Decomposition {
  std::vector<double> weights;
  std::vector<Eigen::Vector4cd> members;
  Eigen::Matrix4cd target;
};

// Weighted average of member concurrences. Validates weights, member
// normalization, and that the ensemble actually reconstructs the target.
double average_concurrence(const Decomposition& d);

}  // namespace trient
