#include "mumimo/rate_engine.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mumimo/special_functions.hpp"

namespace mumimo {

namespace {

constexpr double kLog2E = 1.4426950408889634074;

double log2_1p(double x) { return std::log1p(x) * kLog2E; }

RateReport uniform_report(double snr, const EnergySplit& split, const SystemParams& params) {
  RateReport r;
  r.prelog = split.data_len / params.coherence;
  r.snr = snr;
  r.sum_rate = params.users * r.prelog * log2_1p(snr);
  r.per_user_rate.assign(params.users, r.sum_rate / params.users);
  r.energy_efficiency = params.avg_power > 0.0 ? r.sum_rate / params.avg_power : 0.0;
  return r;
}

}  // namespace

std::string to_string(ReceiverKind kind) {
  switch (kind) {
    case ReceiverKind::MRC: return "mrc";
    case ReceiverKind::ZF: return "zf";
    case ReceiverKind::MMSE: return "mmse";
  }
  return "?";
}

double snr_mrc(const EnergySplit& split, const SystemParams& params) {
  const double e = split.train_energy;
  const double rd = split.data_power;
  if (e <= 0.0 || rd <= 0.0) return 0.0;
  const double num = e * rd * (params.antennas - 1);
  const double den = e * rd * (params.users - 1) + params.users * rd + e + 1.0;
  return num / den;
}

double snr_zf(const EnergySplit& split, const SystemParams& params) {
  if (params.antennas <= params.users)
    throw std::invalid_argument("snr_zf: zero forcing needs M > K");
  const double e = split.train_energy;
  const double rd = split.data_power;
  if (e <= 0.0 || rd <= 0.0) return 0.0;
  return e * rd * (params.antennas - params.users) / (params.users * rd + e + 1.0);
}

RateReport rate_mrc(const EnergySplit& split, const SystemParams& params) {
  return uniform_report(snr_mrc(split, params), split, params);
}

RateReport rate_zf(const EnergySplit& split, const SystemParams& params) {
  return uniform_report(snr_zf(split, params), split, params);
}

RateReport rate_mmse(const EnergySplit& split, const SystemParams& params) {
  if (params.antennas < params.users)
    throw std::invalid_argument("rate_mmse: needs M >= K");
  const int k = params.users;
  const double e = split.train_energy;
  const double rd = split.data_power;
  const double snr = (e <= 0.0 || rd <= 0.0) ? 0.0 : k * rd * e / (k * rd + e + 1.0);

  RateReport r;
  r.prelog = split.data_len / params.coherence;
  r.snr = snr;
  r.mmse_at_spatial_limit = (params.antennas == params.users);
  if (snr > 0.0) {
    const double x = k / snr;
    r.sum_rate = r.prelog * k * f_mmse_exp_diff(params.antennas, k, x) * kLog2E;
    if (r.sum_rate < 0.0) r.sum_rate = 0.0;  // guards round-off at vanishing SNR
  }
  r.per_user_rate.assign(k, r.sum_rate / k);
  r.energy_efficiency = params.avg_power > 0.0 ? r.sum_rate / params.avg_power : 0.0;
  return r;
}

RateReport rate_for(ReceiverKind kind, const EnergySplit& split, const SystemParams& params) {
  switch (kind) {
    case ReceiverKind::MRC: return rate_mrc(split, params);
    case ReceiverKind::ZF: return rate_zf(split, params);
    case ReceiverKind::MMSE: return rate_mmse(split, params);
  }
  throw std::invalid_argument("rate_for: unknown receiver");
}

namespace {

RateReport faded_report(const EnergySplit& split, const SystemParams& params,
                        const FadingProfile& fading, bool zero_forcing) {
  if (static_cast<int>(fading.gains.size()) != params.users)
    throw std::invalid_argument("faded rate: gains length must equal the user count");
  if (zero_forcing && params.antennas <= params.users)
    throw std::invalid_argument("rate_zf_faded: needs M > K");

  const int k_users = params.users;
  std::vector<double> eff(k_users);
  for (int k = 0; k < k_users; ++k) eff[k] = effective_snr_faded(split, fading, k);
  const double eff_total = std::accumulate(eff.begin(), eff.end(), 0.0);

  RateReport r;
  r.prelog = split.data_len / params.coherence;
  r.per_user_rate.resize(k_users);
  double snr_acc = 0.0;
  for (int k = 0; k < k_users; ++k) {
    const double snr = zero_forcing
                           ? eff[k] * (params.antennas - params.users)
                           : eff[k] * (params.antennas - 1) / (eff_total - eff[k] + 1.0);
    snr_acc += snr;
    r.per_user_rate[k] = r.prelog * log2_1p(snr);
    r.sum_rate += r.per_user_rate[k];
  }
  r.snr = snr_acc / k_users;
  r.energy_efficiency = params.avg_power > 0.0 ? r.sum_rate / params.avg_power : 0.0;
  return r;
}

}  // namespace

RateReport rate_mrc_faded(const EnergySplit& split, const SystemParams& params,
                          const FadingProfile& fading) {
  return faded_report(split, params, fading, false);
}

RateReport rate_zf_faded(const EnergySplit& split, const SystemParams& params,
                         const FadingProfile& fading) {
  return faded_report(split, params, fading, true);
}

Fraction dof(int antennas, int users, int coherence) {
  if (antennas < 1 || users < 1 || coherence < 1)
    throw std::invalid_argument("dof: arguments must be positive");
  const long long keff = std::min({static_cast<long long>(antennas),
                                   static_cast<long long>(users),
                                   static_cast<long long>(coherence / 2)});
  long long num = keff * (coherence - keff);
  long long den = coherence;
  const long long g = std::gcd(num, den);
  if (g > 0) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

double power_for_rate(double rho0, int antennas, int users, int coherence) {
  if (!(rho0 > 0.0)) throw std::invalid_argument("power_for_rate: rho0 must be > 0");
  const double t = coherence;
  return std::sqrt(4.0 * rho0 * (coherence - users) / (antennas * t * t));
}

double rate_asymptotic(const SystemParams& params, double data_len, double rho_u) {
  if (!(data_len > 0.0 && data_len <= params.coherence))
    throw std::invalid_argument("rate_asymptotic: data duration outside (0, T]");
  const double t = params.coherence;
  return data_len / t * params.users * log2_1p(rho_u * rho_u * t * t / (4.0 * data_len));
}

double rate_gain_vs_equal_power(const SystemParams& params, double data_len, double rho_u) {
  if (!(data_len > 0.0 && data_len <= params.coherence))
    throw std::invalid_argument("rate_gain_vs_equal_power: data duration outside (0, T]");
  const double t = params.coherence;
  const double ru2 = rho_u * rho_u;
  const double num = 4.0 * data_len + ru2 * t * t;
  const double den = 4.0 * data_len + 4.0 * data_len * (t - data_len) * ru2;
  return data_len / t * params.users * std::log2(num / den);
}

}  // namespace mumimo
