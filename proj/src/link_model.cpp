#include "mumimo/link_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mumimo {

void SystemParams::validate() const {
  if (antennas < 1) throw std::invalid_argument("SystemParams: antennas must be >= 1");
  if (users < 1) throw std::invalid_argument("SystemParams: users must be >= 1");
  if (coherence <= users)
    throw std::invalid_argument("SystemParams: coherence interval must exceed the user count");
  if (avg_power < 0.0) throw std::invalid_argument("SystemParams: avg_power must be >= 0");
  if (peak_power && *peak_power < avg_power)
    throw std::invalid_argument("SystemParams: peak_power must be >= avg_power");
}

EnergySplit make_split_continuous(const SystemParams& params, double alpha, double data_len) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("make_split: alpha must lie in [0, 1]");
  const double max_data = static_cast<double>(params.coherence - params.users);
  if (!(data_len > 0.0 && data_len <= max_data))
    throw std::invalid_argument("make_split: data duration " + std::to_string(data_len) +
                                " outside (0, " + std::to_string(params.coherence) + " - " +
                                std::to_string(params.users) + "]");
  const double budget = params.avg_power * params.coherence;
  EnergySplit s;
  s.alpha = alpha;
  s.data_len = data_len;
  s.train_len = params.coherence - data_len;
  s.train_energy = alpha * budget;
  s.train_power = s.train_energy / s.train_len;
  s.data_power = (1.0 - alpha) * budget / data_len;
  return s;
}

EnergySplit make_split(const SystemParams& params, double alpha, int data_len) {
  if (data_len < 1 || data_len > params.coherence - params.users)
    throw std::invalid_argument("make_split: data duration " + std::to_string(data_len) +
                                " outside [1, " + std::to_string(params.coherence - params.users) +
                                "]");
  return make_split_continuous(params, alpha, static_cast<double>(data_len));
}

double effective_snr(const EnergySplit& split, int users) {
  const double e = split.train_energy;
  const double rd = split.data_power;
  if (e <= 0.0 || rd <= 0.0) return 0.0;
  return rd * e / (users * rd + e + 1.0);
}

double effective_snr_faded(const EnergySplit& split, const FadingProfile& fading, int user) {
  if (user < 0 || user >= static_cast<int>(fading.gains.size()))
    throw std::invalid_argument("effective_snr_faded: user index out of range");
  const double e = split.train_energy;
  const double rd = split.data_power;
  if (e <= 0.0 || rd <= 0.0) return 0.0;
  const double p = fading.gains[user];
  return rd * p * p * e / ((p * e + 1.0) * faded_noise_var(split, fading));
}

double faded_noise_var(const EnergySplit& split, const FadingProfile& fading) {
  const double e = split.train_energy;
  double acc = 1.0;
  for (const double p : fading.gains) acc += split.data_power * p / (p * e + 1.0);
  return acc;
}

EstimatorStats estimator_stats(const EnergySplit& split, int users) {
  const double e = split.train_energy;
  EstimatorStats st;
  st.est_var = e / (e + 1.0);
  st.err_var = 1.0 / (e + 1.0);
  st.noise_var = users * split.data_power / (e + 1.0) + 1.0;
  return st;
}

}  // namespace mumimo
