#pragma once

#include <optional>
#include <vector>

namespace mumimo {

// Single-cell uplink: M base-station antennas, K single-antenna users,
// block fading over coherence intervals of T channel uses, average power
// rho per user per symbol and an optional peak power cap. All powers are
// linear scale; dB exists only at the CLI boundary.
struct SystemParams {
  int antennas = 1;                  // M
  int users = 1;                     // K
  int coherence = 2;                 // T
  double avg_power = 1.0;            // rho
  std::optional<double> peak_power;  // rho_max

  void validate() const;  // throws std::invalid_argument
};

// One split of the per-interval energy budget rho*T between pilots and data.
// Durations are channel uses; data_len may be fractional on the peak-power
// boundary of the joint optimizer, everywhere else it is an integer.
struct EnergySplit {
  double alpha = 0.0;         // fraction of rho*T spent on training
  double train_len = 0.0;     // T_tau
  double data_len = 0.0;      // T_d = T - T_tau
  double train_power = 0.0;   // rho_tau
  double data_power = 0.0;    // rho_d
  double train_energy = 0.0;  // E = rho_tau * T_tau = alpha * rho * T
};

// Per-user large-scale gains p_k (path loss and shadowing), all positive.
struct FadingProfile {
  std::vector<double> gains;
};

struct EstimatorStats {
  double est_var = 0.0;    // variance of each channel-estimate entry, E/(E+1)
  double err_var = 0.0;    // variance of each estimation-error entry, 1/(E+1)
  double noise_var = 0.0;  // equivalent-noise variance, K rho_d/(E+1) + 1
};

// Builds the split for an integer data duration in [1, T-K]; the training
// phase keeps at least K slots for time-orthogonal pilots. Throws
// std::invalid_argument outside that range or for alpha outside [0, 1].
EnergySplit make_split(const SystemParams& params, double alpha, int data_len);

// Same bookkeeping with fractional data_len in (0, T-K]; used along the
// peak-power boundary where the optimal duration is continuous.
EnergySplit make_split_continuous(const SystemParams& params, double alpha, double data_len);

// rho_eff = rho_d E / (K rho_d + E + 1); zero when either phase is starved.
double effective_snr(const EnergySplit& split, int users);

// Effective SNR of user `user` (0-based) under large-scale fading.
double effective_snr_faded(const EnergySplit& split, const FadingProfile& fading, int user);

// Equivalent-noise variance under fading: sum_i rho_d p_i/(p_i E + 1) + 1.
double faded_noise_var(const EnergySplit& split, const FadingProfile& fading);

EstimatorStats estimator_stats(const EnergySplit& split, int users);

}  // namespace mumimo
