#include "mumimo/monte_carlo.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "mumimo/parallel.hpp"

namespace mumimo {

namespace {

constexpr double kSingularRatio = 1e-10;

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::mt19937_64 block_engine(std::uint64_t seed, long block_index, int attempt) {
  const std::uint64_t sub = mix64(seed) ^ mix64(static_cast<std::uint64_t>(block_index) + 1) ^
                            (static_cast<std::uint64_t>(attempt) * 0xda942042e4dd58b5ULL);
  return std::mt19937_64(mix64(sub));
}

bool is_integral(double v) { return std::floor(v) == v; }

}  // namespace

void TrialConfig::validate() const {
  params.validate();
  if (n_blocks < 1) throw std::invalid_argument("TrialConfig: n_blocks must be >= 1");
  if (!(split.train_energy > 0.0))
    throw std::invalid_argument("TrialConfig: training energy must be positive, no estimate exists otherwise");
  if (!is_integral(split.train_len) || !is_integral(split.data_len))
    throw std::invalid_argument("TrialConfig: simulation needs integer phase durations");
  if (split.train_len < params.users)
    throw std::invalid_argument("TrialConfig: training shorter than the user count");
  if (receiver == ReceiverKind::ZF && params.antennas <= params.users)
    throw std::invalid_argument("TrialConfig: zero forcing needs M > K");
  if (receiver == ReceiverKind::MMSE && params.antennas < params.users)
    throw std::invalid_argument("TrialConfig: MMSE combining needs M >= K");
  if (fading) {
    if (static_cast<int>(fading->gains.size()) != params.users)
      throw std::invalid_argument("TrialConfig: fading gains length must equal the user count");
    for (const double p : fading->gains)
      if (!(p > 0.0)) throw std::invalid_argument("TrialConfig: fading gains must be positive");
  }
}

Eigen::MatrixXcd mrc_combiner(const Eigen::MatrixXcd& est) { return est.adjoint(); }

Eigen::MatrixXcd zf_combiner(const Eigen::MatrixXcd& est) {
  const Eigen::MatrixXcd gram = est.adjoint() * est;
  return gram.llt().solve(est.adjoint());
}

Eigen::MatrixXcd mmse_combiner(const Eigen::MatrixXcd& est, double noise_var, double data_power) {
  if (!(noise_var > 0.0) || !(data_power > 0.0))
    throw std::invalid_argument("mmse_combiner: noise_var and data_power must be > 0");
  Eigen::MatrixXcd gram = est.adjoint() * est;
  gram.diagonal().array() += noise_var / data_power;
  return gram.llt().solve(est.adjoint());
}

Eigen::VectorXd per_user_sinr(const Eigen::MatrixXcd& combiner, const Eigen::MatrixXcd& est,
                              double data_power, double noise_var) {
  const Eigen::MatrixXcd mixed = combiner * est;  // K x K
  const int users = static_cast<int>(mixed.rows());
  Eigen::VectorXd sinr(users);
  for (int k = 0; k < users; ++k) {
    const double signal = data_power * std::norm(mixed(k, k));
    const double row_power = data_power * mixed.row(k).squaredNorm();
    const double interference = row_power - signal;
    const double noise = noise_var * combiner.row(k).squaredNorm();
    sinr(k) = signal / (interference + noise);
  }
  return sinr;
}

BlockStats simulate_block(const TrialConfig& config, long block_index) {
  const int m = config.params.antennas;
  const int k = config.params.users;
  const double e = config.split.train_energy;
  const double rd = config.split.data_power;
  const double sqrt_e = std::sqrt(e);

  const double noise_var = config.fading
                               ? faded_noise_var(config.split, *config.fading)
                               : estimator_stats(config.split, k).noise_var;

  BlockStats stats;
  for (int attempt = 0;; ++attempt) {
    auto engine = block_engine(config.seed, block_index, attempt);
    std::normal_distribution<double> half_normal(0.0, std::sqrt(0.5));
    const auto draw = [&] { return std::complex<double>(half_normal(engine), half_normal(engine)); };

    Eigen::MatrixXcd channel(m, k), pilot_noise(m, k);
    for (int col = 0; col < k; ++col)
      for (int row = 0; row < m; ++row) channel(row, col) = draw();
    for (int col = 0; col < k; ++col)
      for (int row = 0; row < m; ++row) pilot_noise(row, col) = draw();

    Eigen::MatrixXcd est(m, k), err(m, k);
    if (config.fading) {
      for (int col = 0; col < k; ++col) {
        const double p = config.fading->gains[col];
        const double denom = p * e + 1.0;
        est.col(col) = (p * std::sqrt(p) * e / denom) * channel.col(col) +
                       (p * sqrt_e / denom) * pilot_noise.col(col);
        err.col(col) = std::sqrt(p) * channel.col(col) - est.col(col);
      }
    } else {
      est = (e / (e + 1.0)) * channel + (sqrt_e / (e + 1.0)) * pilot_noise;
      err = channel - est;
    }

    if (config.receiver == ReceiverKind::ZF) {
      const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(est);
      const auto& sv = svd.singularValues();
      if (sv(sv.size() - 1) < kSingularRatio * sv(0)) {
        ++stats.resamples;
        continue;
      }
    }

    Eigen::MatrixXcd combiner;
    switch (config.receiver) {
      case ReceiverKind::MRC: combiner = mrc_combiner(est); break;
      case ReceiverKind::ZF: combiner = zf_combiner(est); break;
      case ReceiverKind::MMSE: combiner = mmse_combiner(est, noise_var, rd); break;
    }

    stats.sinr = per_user_sinr(combiner, est, rd, noise_var);
    stats.rate_sample = (stats.sinr.array() + 1.0).log().sum() / std::log(2.0);
    stats.sq_est_sum = est.squaredNorm();
    stats.sq_err_sum = err.squaredNorm();
    stats.cross_sum = (est.array() * err.array().conjugate()).sum();
    return stats;
  }
}

EmpiricalReport run_campaign(const TrialConfig& config, int threads) {
  config.validate();
  const long n = config.n_blocks;
  std::vector<BlockStats> blocks(n);
  parallel_for_index(n, threads, [&](long b) { blocks[b] = simulate_block(config, b); });

  const int k = config.params.users;
  const double prelog = config.split.data_len / config.params.coherence;

  EmpiricalReport rep;
  rep.n_blocks = n;
  double rate_acc = 0.0, sq_est = 0.0, sq_err = 0.0;
  std::complex<double> cross{0.0, 0.0};
  for (const auto& b : blocks) {
    rate_acc += b.rate_sample;
    sq_est += b.sq_est_sum;
    sq_err += b.sq_err_sum;
    cross += b.cross_sum;
    rep.zf_resamples += b.resamples;
  }
  const double mean_sample = rate_acc / n;
  rep.mean_rate = prelog * mean_sample;

  double var_acc = 0.0;
  for (const auto& b : blocks) {
    const double d = b.rate_sample - mean_sample;
    var_acc += d * d;
  }
  if (n > 1) rep.rate_ci_halfwidth = prelog * 1.96 * std::sqrt(var_acc / (n - 1)) / std::sqrt(n);

  const double entries = static_cast<double>(n) * config.params.antennas * k;
  rep.est_var_hat = sq_est / entries;
  rep.est_var_err = sq_err / entries;
  const double denom = std::sqrt(sq_est * sq_err);
  if (denom > 0.0) rep.est_err_corr = cross / denom;

  rep.sinr_mean.assign(k, 0.0);
  rep.sinr_var.assign(k, 0.0);
  for (const auto& b : blocks)
    for (int u = 0; u < k; ++u) rep.sinr_mean[u] += b.sinr(u);
  for (int u = 0; u < k; ++u) rep.sinr_mean[u] /= n;
  if (n > 1) {
    for (const auto& b : blocks)
      for (int u = 0; u < k; ++u) {
        const double d = b.sinr(u) - rep.sinr_mean[u];
        rep.sinr_var[u] += d * d;
      }
    for (int u = 0; u < k; ++u) rep.sinr_var[u] /= (n - 1);
  }
  return rep;
}

}  // namespace mumimo
