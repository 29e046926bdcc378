#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "mumimo/link_model.hpp"
#include "mumimo/rate_engine.hpp"

namespace mumimo {

// One seeded simulation campaign over independent coherence blocks. The seed
// fully determines the output; per-block substreams are derived from
// (seed, block index) so parallel execution cannot reorder randomness.
struct TrialConfig {
  SystemParams params;
  EnergySplit split;  // integer durations, train_len >= K, train_energy > 0
  ReceiverKind receiver = ReceiverKind::MRC;
  std::optional<FadingProfile> fading;
  long n_blocks = 1;
  std::uint64_t seed = 1;

  void validate() const;
};

struct BlockStats {
  Eigen::VectorXd sinr;       // per-user post-combining SINR
  double rate_sample = 0.0;   // sum_k log2(1 + sinr_k), prelog not applied
  double sq_est_sum = 0.0;    // sum |est entry|^2 over the M*K entries
  double sq_err_sum = 0.0;    // sum |error entry|^2
  std::complex<double> cross_sum{0.0, 0.0};  // sum est * conj(error)
  int resamples = 0;          // blocks redrawn due to a singular ZF Gram
};

struct EmpiricalReport {
  double mean_rate = 0.0;          // prelog-weighted empirical ergodic sum rate
  double rate_ci_halfwidth = 0.0;  // 95% normal-approximation half-width
  double est_var_hat = 0.0;        // empirical variance of estimate entries
  double est_var_err = 0.0;        // empirical variance of error entries
  std::complex<double> est_err_corr{0.0, 0.0};  // normalized cross-correlation
  std::vector<double> sinr_mean;   // per user, across blocks
  std::vector<double> sinr_var;
  long zf_resamples = 0;
  long n_blocks = 0;
};

// Combiners acting on the M x K channel estimate; rows recover one user each.
Eigen::MatrixXcd mrc_combiner(const Eigen::MatrixXcd& est);
Eigen::MatrixXcd zf_combiner(const Eigen::MatrixXcd& est);
// Regularized form est^H (est^H est + (noise_var/data_power) I)^{-1}; always
// invertible for positive arguments.
Eigen::MatrixXcd mmse_combiner(const Eigen::MatrixXcd& est, double noise_var, double data_power);

// Genie-decomposed per-user SINR of combiner row k applied to the equivalent
// channel: signal rho_d |a_k h_k|^2 against rho_d sum_{i != k} |a_k h_i|^2
// plus noise_var ||a_k||^2.
Eigen::VectorXd per_user_sinr(const Eigen::MatrixXcd& combiner, const Eigen::MatrixXcd& est,
                              double data_power, double noise_var);

// Pilot phase, MMSE channel estimate, data phase, combining; deterministic in
// (config.seed, block_index).
BlockStats simulate_block(const TrialConfig& config, long block_index);

// Aggregates n_blocks independent blocks with a fixed reduction order.
EmpiricalReport run_campaign(const TrialConfig& config, int threads = 1);

}  // namespace mumimo
