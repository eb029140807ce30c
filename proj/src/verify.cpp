#include "trient/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "trient/state_json.hpp"

namespace trient {

namespace {

// Each suite mixes a fixed offset into the base seed so suites are
// decorrelated and a suite run standalone matches the same suite inside
// run_suite. Within a suite, trial t uses consecutive sub-seeds
// ss + stride*t + 0,1,... with one sub-seed per independent draw.
constexpr std::uint64_t kSuiteStride = 0x9E3779B97F4A7C15ULL;

std::uint64_t suite_seed(const TrialConfig& cfg, int suite_index) {
  return cfg.seed +
         kSuiteStride * static_cast<std::uint64_t>(suite_index + 1);
}

void validate_cfg(const TrialConfig& cfg) {
  if (cfg.trials < 1)
    throw InvalidParams("trial count must be >= 1, got " +
                        std::to_string(cfg.trials));
  if (cfg.n_values.empty())
    throw InvalidParams("n_values must be non-empty");
  for (int n : cfg.n_values)
    if (n < 1)
      throw InvalidParams("n_values entries must be >= 1, got " +
                          std::to_string(n));
  if (!(cfg.tol > 0.0)) throw InvalidParams("tolerance must be positive");
}

nlohmann::ordered_json channel_to_json(const KrausChannel& ch) {
  nlohmann::ordered_json ops = nlohmann::ordered_json::array();
  for (const auto& m : ch.operators) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        row.push_back({m(i, j).real(), m(i, j).imag()});
      rows.push_back(std::move(row));
    }
    ops.push_back(std::move(rows));
  }
  return {{"completeness", ch.completeness == Completeness::Complete
                               ? "complete"
                               : "sub_normalized"},
          {"operators", std::move(ops)}};
}

// Tracks violations and keeps only the first witness.
struct Tally {
  int violations = 0;
  double worst = std::numeric_limits<double>::infinity();
  nlohmann::ordered_json witness;

  void record(double margin, double bar,
              const std::function<nlohmann::ordered_json()>& make_witness) {
    worst = std::min(worst, margin);
    if (margin < -bar) {
      ++violations;
      if (witness.is_null()) {
        witness = make_witness();
        witness["margin"] = margin;
      }
    }
  }
};

// Eigenvalues above this count toward the rank used by the
// decomposition machinery.
constexpr double kGhjwRankCut = 1e-12;

struct EigenEnsemble {
  std::vector<double> q;
  std::vector<Eigen::Vector4cd> e;
};

EigenEnsemble eigen_ensemble(const TwoQubitDensity& rho) {
  const Eigen::Matrix4cd sym =
      0.5 * (rho.matrix() + rho.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(sym);
  if (es.info() != Eigen::Success)
    throw ConvergenceFailure("eigenvalue iteration did not converge");
  EigenEnsemble out;
  for (int i = 3; i >= 0; --i) {  // descending
    const double q = es.eigenvalues()[i];
    if (q > kGhjwRankCut) {
      out.q.push_back(q);
      out.e.push_back(es.eigenvectors().col(i));
    }
  }
  return out;
}

}  // namespace

void validate_channel(const KrausChannel& ch, int n) {
  if (ch.operators.empty())
    throw InvalidParams("channel has no Kraus operators");
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t j = 0; j < ch.operators.size(); ++j) {
    const auto& m = ch.operators[j];
    if (m.cols() != n)
      throw DimensionMismatch("Kraus operator " + std::to_string(j) +
                              " has " + std::to_string(m.cols()) +
                              " columns, expected " + std::to_string(n));
    if (m.rows() < 1)
      throw DimensionMismatch("Kraus operator " + std::to_string(j) +
                              " has no rows");
    sum += m.adjoint() * m;
  }
  if (ch.completeness == Completeness::Complete) {
    const double dev =
        (sum - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (dev > tol::unitarity)
      throw InvalidParams("completeness sum deviates from identity by " +
                          std::to_string(dev));
  } else {
    const Eigen::VectorXd ev = hermitian_eigvals(sum);
    if (ev[0] > 1.0 + tol::unitarity)
      throw InvalidParams("sub-normalized channel exceeds identity: top "
                          "eigenvalue " +
                          std::to_string(ev[0]));
  }
}

KrausChannel sample_kraus_channel(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < 1)
    throw InvalidParams("channel dimensions must be positive");
  GaussianRng rng(seed);
  const Eigen::MatrixXcd iso =
      haar_isometry(rng, static_cast<Eigen::Index>(k) * n, n);
  KrausChannel ch;
  ch.completeness = Completeness::Complete;
  for (int j = 0; j < k; ++j)
    ch.operators.push_back(iso.middleRows(static_cast<Eigen::Index>(j) * n, n));
  return ch;
}

KrausChannel scale_channel(const KrausChannel& ch, double factor) {
  if (!(factor > 0.0 && factor <= 1.0))
    throw InvalidParams("scale factor must lie in (0, 1], got " +
                        std::to_string(factor));
  KrausChannel out;
  out.completeness = Completeness::SubNormalized;
  for (const auto& m : ch.operators) out.operators.push_back(factor * m);
  return out;
}

std::pair<double, double> chi_under_channel(const TripartitePureState& s,
                                            const KrausChannel& ch) {
  validate_channel(ch, s.n());
  const double chi0 = chi(s);
  double avg = 0.0;
  for (const auto& m : ch.operators) {
    const auto [p, out] = apply_kraus_branch(s, m);
    if (out) avg += p * chi(*out);
  }
  return {chi0, avg};
}

GHZParams sample_ghz_params(GaussianRng& rng) {
  const double l0 = 0.1 + 0.8 * rng.uniform();
  return {l0, std::sqrt(1.0 - l0 * l0),
          std::numbers::pi * rng.uniform()};
}

WParams sample_w_params(GaussianRng& rng, double floor) {
  if (!(floor >= 0.0 && floor < 1.0 / std::sqrt(3.0)))
    throw InvalidParams("W coefficient floor must lie in [0, 1/sqrt(3))");
  for (;;) {
    double g[3];
    for (double& x : g) x = std::abs(rng.normal());
    const double nrm = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
    if (nrm == 0.0) continue;
    for (double& x : g) x /= nrm;
    if (g[0] >= floor && g[1] >= floor && g[2] >= floor)
      return {g[0], g[1], g[2], 0.0};
  }
}

PropertyResult check_chi_monotonicity(const TrialConfig& cfg,
                                      const std::vector<int>& k_range) {
  validate_cfg(cfg);
  if (k_range.empty()) throw InvalidParams("k_range must be non-empty");
  for (int k : k_range)
    if (k < 1) throw InvalidParams("k_range entries must be >= 1");
  const std::uint64_t ss = suite_seed(cfg, 0);
  const std::size_t nn = cfg.n_values.size();
  Tally tally;
  for (int t = 0; t < cfg.trials; ++t) {
    const int n = cfg.n_values[t % nn];
    const int k = k_range[(t / nn) % k_range.size()];
    const std::uint64_t base = ss + 3ull * static_cast<std::uint64_t>(t);
    const TripartitePureState st = random_haar_pure(n, base);
    const KrausChannel ch = sample_kraus_channel(n, k, base + 1);
    GaussianRng aux(base + 2);
    const double s = 0.05 + 0.9 * aux.uniform();
    const KrausChannel sub = scale_channel(ch, std::sqrt(s));
    const auto [chi0, avg_complete] = chi_under_channel(st, ch);
    const double avg_sub = chi_under_channel(st, sub).second;
    const auto witness = [&](const KrausChannel& used, const char* kind) {
      return [&st, &used, kind, t, n, k] {
        return nlohmann::ordered_json{{"trial", t},
                                      {"kind", kind},
                                      {"n", n},
                                      {"k", k},
                                      {"state", state_to_json(st)},
                                      {"channel", channel_to_json(used)}};
      };
    };
    tally.record(chi0 - avg_complete, cfg.tol, witness(ch, "complete"));
    tally.record(chi0 - avg_sub, cfg.tol, witness(sub, "sub_normalized"));
  }
  return {"monotonicity", cfg.trials, tally.violations, tally.worst,
          tally.witness, {}};
}

PropertyResult check_ordering(const TrialConfig& cfg) {
  validate_cfg(cfg);
  const std::uint64_t ss = suite_seed(cfg, 1);
  Tally tally;
  for (int t = 0; t < cfg.trials; ++t) {
    const int n = cfg.n_values[t % cfg.n_values.size()];
    const TripartitePureState st =
        random_haar_pure(n, ss + static_cast<std::uint64_t>(t));
    const MeasureReport r = full_report(st);
    const double margin = std::min(r.coa - r.concurrence,
                                   r.concurrence - r.negativity);
    tally.record(margin, cfg.tol, [&st, t, n, &r] {
      return nlohmann::ordered_json{{"trial", t},
                                    {"n", n},
                                    {"coa", r.coa},
                                    {"concurrence", r.concurrence},
                                    {"negativity", r.negativity},
                                    {"state", state_to_json(st)}};
    });
  }
  return {"ordering", cfg.trials, tally.violations, tally.worst,
          tally.witness, {}};
}

PropertyResult check_lu_invariance(const TrialConfig& cfg) {
  validate_cfg(cfg);
  const std::uint64_t ss = suite_seed(cfg, 2);
  Tally tally;
  for (int t = 0; t < cfg.trials; ++t) {
    const int n = cfg.n_values[t % cfg.n_values.size()];
    const std::uint64_t base = ss + 2ull * static_cast<std::uint64_t>(t);
    const TripartitePureState st = random_haar_pure(n, base);
    GaussianRng lu(base + 1);
    LocalUnitaryTriple u;
    u.a = haar_unitary(lu, 2);
    u.b = haar_unitary(lu, 2);
    u.c = haar_unitary(lu, n);
    const MeasureReport r0 = full_report(st);
    const MeasureReport r1 = full_report(apply_local_unitaries(st, u));
    const double dev = std::max(
        {std::abs(r0.concurrence - r1.concurrence),
         std::abs(r0.negativity - r1.negativity), std::abs(r0.coa - r1.coa),
         std::abs(r0.tau - r1.tau), std::abs(r0.chi - r1.chi),
         std::abs(r0.varpi - r1.varpi), std::abs(r0.eta - r1.eta)});
    // Margin is the slack left under the tolerance.
    tally.record(cfg.tol - dev, 0.0, [&st, t, n, dev] {
      return nlohmann::ordered_json{{"trial", t},
                                    {"n", n},
                                    {"max_field_deviation", dev},
                                    {"state", state_to_json(st)}};
    });
  }
  return {"lu_invariance", cfg.trials, tally.violations, tally.worst,
          tally.witness, {}};
}

PropertyResult check_class_signatures(const TrialConfig& cfg) {
  validate_cfg(cfg);
  const std::uint64_t ss = suite_seed(cfg, 3);
  GaussianRng rng(ss);
  constexpr int kPerFamily = 200;
  Tally tally;
  int count = 0;

  const auto note = [&](const char* family, int idx, const char* field,
                        double value, double margin,
                        const TripartitePureState& st) {
    tally.record(margin, 0.0, [family, idx, field, value, &st] {
      return nlohmann::ordered_json{{"family", family},
                                    {"index", idx},
                                    {"field", field},
                                    {"value", value},
                                    {"state", state_to_json(st)}};
    });
  };
  // Vanishing fields must sit at or below cfg.tol; nonzero fields must
  // clear the class-gap threshold.
  const auto vanish = [&](const char* family, int idx, const char* field,
                          double value, const TripartitePureState& st) {
    note(family, idx, field, value, cfg.tol - value, st);
  };
  const auto nonzero = [&](const char* family, int idx, const char* field,
                           double value, const TripartitePureState& st) {
    note(family, idx, field, value, value - tol::nonzero, st);
  };

  for (int i = 0; i < kPerFamily; ++i, ++count) {
    const int n = cfg.n_values[i % cfg.n_values.size()];
    const TripartitePureState st = product_AB_C(
        haar_state_vector(rng, 4), haar_state_vector(rng, n));
    const MeasureReport r = full_report(st);
    vanish("product_AB_C", i, "chi", r.chi, st);
    vanish("product_AB_C", i, "varpi", r.varpi, st);
    vanish("product_AB_C", i, "eta", r.eta, st);
  }
  for (int i = 0; i < kPerFamily; ++i, ++count) {
    const int n = cfg.n_values[i % cfg.n_values.size()];
    const TripartitePureState st = product_A_BC(
        haar_state_vector(rng, 2), haar_state_vector(rng, 2 * n));
    const MeasureReport r = full_report(st);
    vanish("product_A_BC", i, "chi", r.chi, st);
    vanish("product_A_BC", i, "varpi", r.varpi, st);
    vanish("product_A_BC", i, "eta", r.eta, st);
  }
  for (int i = 0; i < kPerFamily; ++i, ++count) {
    const TripartitePureState st = ghz_state(sample_ghz_params(rng));
    const MeasureReport r = full_report(st);
    nonzero("ghz", i, "chi", r.chi, st);
    vanish("ghz", i, "varpi", r.varpi, st);
  }
  for (int i = 0; i < kPerFamily; ++i, ++count) {
    const TripartitePureState st = w_state(sample_w_params(rng, 0.1));
    const MeasureReport r = full_report(st);
    nonzero("w", i, "chi", r.chi, st);
    nonzero("w", i, "varpi", r.varpi, st);
  }
  const StandardState standards[] = {StandardState::S223,
                                     StandardState::S223Prime,
                                     StandardState::S224};
  for (int i = 0; i < 3; ++i, ++count) {
    const TripartitePureState st = standard_state(standards[i]);
    const MeasureReport r = full_report(st);
    vanish("standard", i, "concurrence", r.concurrence, st);
    vanish("standard", i, "negativity", r.negativity, st);
    vanish("standard", i, "varpi", r.varpi, st);
    nonzero("standard", i, "chi", r.chi, st);
  }
  return {"class_signatures", count, tally.violations, tally.worst,
          tally.witness, {}};
}

Decomposition ghjw_decomposition(const TwoQubitDensity& rho,
                                 const Eigen::MatrixXcd& mixing) {
  const EigenEnsemble ens = eigen_ensemble(rho);
  const int r = static_cast<int>(ens.q.size());
  if (r == 0) throw InternalConsistency("density matrix has numerical rank 0");
  if (mixing.cols() != r)
    throw DimensionMismatch("mixing isometry must have rank(rho) = " +
                            std::to_string(r) + " columns, got " +
                            std::to_string(mixing.cols()));
  if (mixing.rows() < r)
    throw LengthTooSmall("ensemble length " + std::to_string(mixing.rows()) +
                         " below rank " + std::to_string(r));
  const Eigen::MatrixXcd gram = mixing.adjoint() * mixing;
  const double iso_dev =
      (gram - Eigen::MatrixXcd::Identity(r, r)).cwiseAbs().maxCoeff();
  if (iso_dev > tol::unitarity)
    throw NotUnitary("mixing matrix deviates from an isometry by " +
                     std::to_string(iso_dev));
  Decomposition d;
  d.target = rho.matrix();
  for (Eigen::Index i = 0; i < mixing.rows(); ++i) {
    Eigen::Vector4cd phi = Eigen::Vector4cd::Zero();
    for (int j = 0; j < r; ++j)
      phi += mixing(i, j) * std::sqrt(ens.q[j]) * ens.e[j];
    const double p = phi.squaredNorm();
    if (p < tol::null_branch) continue;
    d.weights.push_back(p);
    d.members.push_back(phi / std::sqrt(p));
  }
  return d;
}

Decomposition ghjw_decomposition_sample(const TwoQubitDensity& rho,
                                        int length, std::uint64_t seed) {
  const int r = static_cast<int>(eigen_ensemble(rho).q.size());
  if (length < r)
    throw LengthTooSmall("ensemble length " + std::to_string(length) +
                         " below rank " + std::to_string(r));
  GaussianRng rng(seed);
  return ghjw_decomposition(rho, haar_isometry(rng, length, r));
}

PropertyResult check_coa_bound(const TrialConfig& cfg,
                               int decomps_per_state) {
  validate_cfg(cfg);
  if (decomps_per_state < 1)
    throw InvalidParams("decomps_per_state must be >= 1");
  const std::uint64_t ss = suite_seed(cfg, 4);
  const std::uint64_t stride =
      static_cast<std::uint64_t>(decomps_per_state) + 1;
  Tally tally;
  double ratio_sum = 0.0, ratio_min = 1.0, ratio_max = 0.0;
  int rated = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    const int n = cfg.n_values[t % cfg.n_values.size()];
    const std::uint64_t base = ss + stride * static_cast<std::uint64_t>(t);
    const TripartitePureState st = random_haar_pure(n, base);
    const TwoQubitDensity rho = reduced_AB(st);
    const double ca = coa(rho);
    const int r = static_cast<int>(eigen_ensemble(rho).q.size());
    double best = 0.0;
    for (int d = 0; d < decomps_per_state; ++d) {
      const int length = r + (d % (7 - r));
      const Decomposition dec =
          ghjw_decomposition_sample(rho, length, base + 1 + d);
      const double avg = average_concurrence(dec);
      best = std::max(best, avg);
      tally.record(ca - avg, cfg.tol, [&st, t, n, length, ca, avg] {
        return nlohmann::ordered_json{{"trial", t},
                                      {"n", n},
                                      {"ensemble_length", length},
                                      {"coa", ca},
                                      {"average_concurrence", avg},
                                      {"state", state_to_json(st)}};
      });
    }
    if (ca > tol::vanish) {
      const double ratio = best / ca;
      ratio_sum += ratio;
      ratio_min = std::min(ratio_min, ratio);
      ratio_max = std::max(ratio_max, ratio);
      ++rated;
    }
  }
  nlohmann::ordered_json details;
  if (rated > 0)
    details = {{"best_ratio_mean", ratio_sum / rated},
               {"best_ratio_min", ratio_min},
               {"best_ratio_max", ratio_max},
               {"states_rated", rated}};
  return {"coa_bound", cfg.trials, tally.violations, tally.worst,
          tally.witness, details};
}

PropertyResult explore_ab_side_monotonicity(const TrialConfig& cfg) {
  validate_cfg(cfg);
  const std::uint64_t ss = suite_seed(cfg, 5);
  constexpr int kOps = 2;
  double worst = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  int negatives = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    const int n = cfg.n_values[t % cfg.n_values.size()];
    const std::uint64_t base = ss + 2ull * static_cast<std::uint64_t>(t);
    const TripartitePureState st = random_haar_pure(n, base);
    GaussianRng crng(base + 1);
    const Eigen::MatrixXcd iso = haar_isometry(crng, 2 * kOps, 2);
    const double chi0 = chi(st);
    double avg = 0.0;
    for (int j = 0; j < kOps; ++j) {
      const Eigen::Matrix2cd m = iso.middleRows(2 * j, 2);
      // Apply the operator to qubit A instead of C.
      Eigen::VectorXcd amps(4 * static_cast<Eigen::Index>(n));
      for (int d = 0; d < 2; ++d)
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < n; ++c)
            amps[st.index(d, b, c)] =
                m(d, 0) * st.amp(0, b, c) + m(d, 1) * st.amp(1, b, c);
      const double p = amps.squaredNorm();
      if (p < tol::null_branch) continue;
      avg += p * chi(TripartitePureState(n, amps));
    }
    const double margin = chi0 - avg;
    worst = std::min(worst, margin);
    sum += margin;
    if (margin < -cfg.tol) ++negatives;
  }
  PropertyResult r;
  r.name = "ab_side_exploratory";
  r.trials_run = cfg.trials;
  r.violations = 0;  // observational; nothing here is asserted
  r.worst_margin = worst;
  r.details = {{"mean_margin", sum / cfg.trials},
               {"negative_margins", negatives}};
  return r;
}

nlohmann::ordered_json to_json(const PropertyResult& r) {
  nlohmann::ordered_json j{{"name", r.name},
                           {"trials_run", r.trials_run},
                           {"violations", r.violations},
                           {"worst_margin", r.worst_margin},
                           {"witness", r.witness}};
  if (!r.details.is_null()) j["details"] = r.details;
  return j;
}

const std::vector<std::string>& all_suite_names() {
  static const std::vector<std::string> names = {
      "monotonicity", "ordering", "lu_invariance", "class_signatures",
      "coa_bound"};
  return names;
}

std::vector<PropertyResult> run_suite(const TrialConfig& cfg,
                                      const std::vector<std::string>& suites) {
  const auto& canonical = all_suite_names();
  for (const auto& s : suites)
    if (std::find(canonical.begin(), canonical.end(), s) == canonical.end())
      throw UnknownSuite("unknown suite \"" + s + "\"");
  std::vector<PropertyResult> out;
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    if (std::find(suites.begin(), suites.end(), canonical[i]) == suites.end())
      continue;
    switch (i) {
      case 0: out.push_back(check_chi_monotonicity(cfg)); break;
      case 1: out.push_back(check_ordering(cfg)); break;
      case 2: out.push_back(check_lu_invariance(cfg)); break;
      case 3: out.push_back(check_class_signatures(cfg)); break;
      case 4: out.push_back(check_coa_bound(cfg)); break;
    }
  }
  return out;
}

}  // namespace trient
