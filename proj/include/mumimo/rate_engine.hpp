#pragma once

#include <string>
#include <vector>

#include "mumimo/link_model.hpp"

namespace mumimo {

enum class ReceiverKind { MRC, ZF, MMSE };

std::string to_string(ReceiverKind kind);

// Closed-form achievable-rate summary for one configuration. Rates are in
// bits per channel use and already carry the training prelog.
struct RateReport {
  double sum_rate = 0.0;
  std::vector<double> per_user_rate;
  double snr = 0.0;  // post-combining SNR; mean across users under fading
  double energy_efficiency = 0.0;  // sum_rate / avg_power
  double prelog = 0.0;             // data fraction T_d / T
  bool mmse_at_spatial_limit = false;  // MMSE evaluated at K == M
};

// Exact rational, reduced, positive denominator.
struct Fraction {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Post-combining SNR for MRC: E rho_d (M-1) / (E rho_d (K-1) + K rho_d + E + 1).
double snr_mrc(const EnergySplit& split, const SystemParams& params);

// Post-combining SNR for ZF, requires M > K: E rho_d (M-K) / (K rho_d + E + 1),
// identically (M-K) * effective_snr.
double snr_zf(const EnergySplit& split, const SystemParams& params);

RateReport rate_mrc(const EnergySplit& split, const SystemParams& params);
RateReport rate_zf(const EnergySplit& split, const SystemParams& params);

// MMSE sum rate via the exponential-integral determinant formula; exact
// ergodic value for the equivalent channel, requires M >= K.
RateReport rate_mmse(const EnergySplit& split, const SystemParams& params);

RateReport rate_for(ReceiverKind kind, const EnergySplit& split, const SystemParams& params);

RateReport rate_mrc_faded(const EnergySplit& split, const SystemParams& params,
                          const FadingProfile& fading);
RateReport rate_zf_faded(const EnergySplit& split, const SystemParams& params,
                         const FadingProfile& fading);

// Total degrees of freedom K'(1 - K'/T) with K' = min(M, K, floor(T/2)),
// returned exactly.
Fraction dof(int antennas, int users, int coherence);

// Leading-order power needed to hold the per-user rate (1-K/T) log2(1+rho0)
// as the array grows: sqrt(4 rho0 (T-K) / (M T^2)).
double power_for_rate(double rho0, int antennas, int users, int coherence);

// Large-array limit of the optimally split rate at fixed rho_u = sqrt(M) rho:
// (T_d/T) K log2(1 + rho_u^2 T^2 / (4 T_d)).
double rate_asymptotic(const SystemParams& params, double data_len, double rho_u);

// Large-array rate advantage of the optimal split over equal per-phase power:
// (T_d/T) K log2[(4 T_d + rho_u^2 T^2) / (4 T_d + 4 T_d (T-T_d) rho_u^2)].
double rate_gain_vs_equal_power(const SystemParams& params, double data_len, double rho_u);

}  // namespace mumimo
