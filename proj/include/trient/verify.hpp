#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "trient/measures.hpp"
#include "trient/random.hpp"
#include "trient/states.hpp"

namespace trient {

// A channel on subsystem C given by Kraus operators (each n' x n). Complete
// channels satisfy sum_j m_j^dagger m_j = I; sub-normalized ones satisfy
// sum_j m_j^dagger m_j <= I (a selective operation that may discard weight).
enum class Completeness { Complete, SubNormalized };

struct KrausChannel {
  std::vector<Eigen::MatrixXcd> operators;
  Completeness completeness = Completeness::Complete;
};

void validate_channel(const KrausChannel& ch, int n);

// k Kraus operators of shape n x n obtained by slicing a Haar (kn) x n
// isometry; always a complete channel. Deterministic per seed.
KrausChannel sample_kraus_channel(int n, int k, std::uint64_t seed);

// Multiply every operator by `factor` in (0, 1]; result is sub-normalized.
KrausChannel scale_channel(const KrausChannel& ch, double factor);

// chi of the input state and the branch-probability-weighted average chi
// over the channel outputs (null branches contribute nothing).
std::pair<double, double> chi_under_channel(const TripartitePureState& s,
                                            const KrausChannel& ch);

struct TrialConfig {
  std::uint64_t seed = 42;
  int trials = 1000;
  std::vector<int> n_values = {2, 3, 4};
  double tol = 1e-8;
};

// Outcome of one property suite. `worst_margin` is the smallest slack seen
// across all checks (negative values measure the worst violation).
// `witness` is null unless a violation occurred, in which case it pins the
// first offending fixture. `details` carries suite-specific diagnostics.
struct PropertyResult {
  std::string name;
  int trials_run = 0;
  int violations = 0;
  double worst_margin = 0.0;
  nlohmann::ordered_json witness;
  nlohmann::ordered_json details;
};

nlohmann::ordered_json to_json(const PropertyResult& r);

// Parameter samplers used by the suites. GHZ coefficients are kept away
// from the degenerate endpoints; W coefficients are drawn on the lt3 = 0
// slice with every coefficient at or above `floor` so the nonzero-signature
// checks have guaranteed headroom.
GHZParams sample_ghz_params(GaussianRng& rng);
WParams sample_w_params(GaussianRng& rng, double floor);

// Suites. Each derives its own sub-seed from cfg.seed and a fixed per-suite
// offset, so results are identical whether a suite runs alone or as part of
// run_suite.
PropertyResult check_chi_monotonicity(const TrialConfig& cfg,
                                      const std::vector<int>& k_range = {2,
                                                                         3});
PropertyResult check_ordering(const TrialConfig& cfg);
PropertyResult check_lu_invariance(const TrialConfig& cfg);
PropertyResult check_class_signatures(const TrialConfig& cfg);
PropertyResult check_coa_bound(const TrialConfig& cfg,
                               int decomps_per_state = 50);

// Exploratory probe of chi under channels acting on qubit A instead of C.
// Reports margins in `details` and never counts violations; nothing in the
// theory covered here guarantees this direction, so it is observational.
PropertyResult explore_ab_side_monotonicity(const TrialConfig& cfg);

// Ensemble {p_i, |phi_i>} for rho built from its eigendecomposition
// {q_j, |e_j>} and a length x rank isometry U (U^dagger U = I):
//   |phi_i> proportional to sum_j U_ij sqrt(q_j) |e_j>,  p_i = its norm^2.
// Every such ensemble averages back to rho exactly.
Decomposition ghjw_decomposition(const TwoQubitDensity& rho,
                                 const Eigen::MatrixXcd& mixing);

// Same with a Haar-random mixing isometry; length must be >= rank(rho).
Decomposition ghjw_decomposition_sample(const TwoQubitDensity& rho,
                                        int length, std::uint64_t seed);

// Canonical suite names in execution order: monotonicity, ordering,
// lu_invariance, class_signatures, coa_bound.
const std::vector<std::string>& all_suite_names();

// Runs the requested suites (deduplicated, canonical order); throws
// UnknownSuite on any unrecognized name before running anything.
std::vector<PropertyResult> run_suite(const TrialConfig& cfg,
                                      const std::vector<std::string>& suites);

}  // namespace trient
