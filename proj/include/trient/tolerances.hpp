#pragma once

// Numerical policy knobs, collected in one place so every module agrees on
// what "zero" means. All values are absolute tolerances on doubles.
namespace trient::tol {

// Max |m - m^dagger| entry for a matrix to count as Hermitian.
inline constexpr double hermiticity = 1e-9;

// Eigenvalues of a nominally PSD matrix in [-psd_clip, 0) are clipped to 0;
// anything below -psd_clip is a hard error.
inline constexpr double psd_clip = 1e-9;

// |tr(rho) - 1| allowed for density matrices.
inline constexpr double trace_unit = 1e-10;

// Unitarity check: max |u^dagger u - I| entry.
inline constexpr double unitarity = 1e-10;

// Parameter normalization (sum of squared coefficients vs 1).
inline constexpr double param_norm = 1e-12;

// Singular values at or below this do not count toward a local rank.
inline constexpr double rank = 1e-8;

// Eigenvalues of sqrt(rho)*rho_tilde*sqrt(rho) at or below this are rank
// noise and are treated as exact zeros before taking square roots. Without
// this, noise at ~1e-16 turns into ~1e-8 contributions to the lambda sum.
inline constexpr double lambda_floor = 1e-13;

// Differences that are non-negative by theory (coa^2-C^2, coa^2-N^2,
// C^2-N^2) are snapped to 0 inside [-zero_snap, zero_snap]; a value below
// -zero_snap is a hard error.
inline constexpr double zero_snap = 1e-12;

// eta = C - N is clipped to 0 only on [-eta_window, 0); below that, error.
inline constexpr double eta_window = 1e-9;

// Kraus branches with probability below this are reported as null outcomes.
inline constexpr double null_branch = 1e-14;

// Decomposition checks: weight sum vs 1, and max entry deviation of the
// reconstructed density matrix from its target.
inline constexpr double weight_sum = 1e-10;
inline constexpr double reconstruction = 1e-9;

// Classification thresholds: a measure is "vanishing" at or below the first
// and "clearly nonzero" above the second.
inline constexpr double vanish = 1e-9;
inline constexpr double nonzero = 1e-4;

}  // namespace trient::tol
