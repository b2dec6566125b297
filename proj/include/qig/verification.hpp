#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qig/g_function.hpp"
#include "qig/linalg.hpp"
#include "qig/monotone_metric.hpp"

namespace qig {

/// CPTP map in Kraus form: rho -> sum_i K_i rho K_i^dagger.
struct StochasticMap {
  std::vector<CMat> kraus;  // m blocks, each n_out x n_in

  int n_in() const;
  int n_out() const;
  CMat apply(const CMat& rho) const;
  /// || sum_i K_i^dagger K_i - I ||; zero iff trace preserving.
  double completeness_defect() const;
};

/// Random isometry (m*n_out) x n_in cut into m Kraus blocks; the Kraus
/// condition holds exactly by construction. Deterministic per seed.
StochasticMap sample_cptp(int n_in, int n_out, int m, std::uint64_t seed);

/// Outcome of a randomized property check, reproducible from (seed, config).
struct TrialReport {
  std::string check;
  std::string subject;
  std::uint64_t seed = 0;
  int trials = 0;
  bool passed = true;
  /// Worst excess beyond the per-property slack, 0 when everything holds.
  double max_violation = 0.0;
  nlohmann::json properties;  // per-property max gap / slack / worst trial
  nlohmann::json witness;     // serialized inputs of the worst trial

  nlohmann::json to_json() const;
};

/// lambda_{T rho}(T X, T X) <= lambda_rho(X, X) + 1e-10 over sampled CPTP
/// maps with varying (n_in, n_out, Kraus rank).
TrialReport check_metric_monotonicity(const MonotoneMetric& m, int trials,
                                      std::uint64_t seed);

/// Positivity at equal traces, homogeneity, joint convexity, monotonicity
/// under sampled CPTP maps, and finite-difference differentiability of the
/// relative g-entropy.
TrialReport check_entropy_axioms(const GFunction& g, int trials,
                                 std::uint64_t seed);

/// Row-major [re, im] pair encoding shared by reports and the CLI.
nlohmann::json mat_to_json(const CMat& m);
CMat mat_from_json(const nlohmann::json& j);

}  // namespace qig
