#include "mumimo/training_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mumimo {

namespace {

constexpr double kLog2E = 1.4426950408889634074;

void check_duration(const SystemParams& params, double data_len) {
  if (!(data_len >= 1.0 && data_len <= params.coherence - params.users))
    throw std::invalid_argument("optimal_alpha: data duration outside [1, T-K]");
}

}  // namespace

std::string to_string(OptCase c) {
  switch (c) {
    case OptCase::PeakTraining: return "Case1-peak-training";
    case OptCase::PeakData: return "Case2-peak-data";
    case OptCase::Interior: return "Case3-interior";
  }
  return "?";
}

GoldenResult golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                                     double tol, int max_iter) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  int it = 0;
  while (b - a > tol && it < max_iter) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++it;
  }
  const double x = 0.5 * (a + b);
  return {x, f(x), it};
}

AlphaOptimum optimal_alpha_zf(const SystemParams& params, double data_len) {
  check_duration(params, data_len);
  const double budget = params.avg_power * params.coherence;  // rho T
  const double k = params.users;
  if (budget <= 0.0) return {0.5, 0.0};

  if (data_len == k) {
    return {0.5, budget * budget / (4.0 * k * (1.0 + budget))};
  }
  // Branch forms -gamma +- sqrt(gamma(gamma+1)) and the matching rho_eff,
  // rationalized so nothing cancels when |gamma| is large (low SNR).
  const double gamma = (k * budget + data_len) / (budget * (data_len - k));
  if (data_len > k) {
    const double s = std::sqrt(gamma * (gamma + 1.0));
    const double alpha = gamma / (s + gamma);  // == sqrt(g(g+1)) - g
    const double snr = budget / (data_len - k) * gamma / ((s + gamma) * (s + gamma));
    return {alpha, snr};
  }
  // T_d < K: gamma < -1 here, so work with g = -gamma > 1.
  const double g = -gamma;
  const double s = std::sqrt(g * (g - 1.0));
  const double alpha = g / (g + s);  // == g - sqrt(g(g-1))
  const double snr = budget / (data_len - k) * (-g) / ((g + s) * (g + s));
  return {alpha, snr};
}

AlphaOptimum optimal_alpha_mrc(const SystemParams& params, double data_len) {
  check_duration(params, data_len);
  const double budget = params.avg_power * params.coherence;
  const double k = params.users;
  double alpha = 0.5;
  if (budget > 0.0) {
    // Rationalized form of [sqrt((rho T K + T_d)(rho T T_d + T_d)) - (rho T K + T_d)]
    // / (rho T (T_d - K)); also exact at T_d == K where it collapses to 1/2.
    const double a = k * budget + data_len;
    const double b = data_len * (budget + 1.0);
    alpha = 1.0 / (1.0 + std::sqrt(b / a));
  }
  double snr = 0.0;
  if (budget > 0.0) {
    const SystemParams& p = params;
    snr = snr_mrc(make_split_continuous(p, alpha, data_len), p);
  }
  return {alpha, snr};
}

FeasibleInterval feasible_alpha_interval(const SystemParams& params, double data_len) {
  if (!params.peak_power)
    throw std::invalid_argument("feasible_alpha_interval: no peak power configured");
  const double budget = params.avg_power * params.coherence;
  if (budget <= 0.0) return {0.0, 1.0};
  const double train_len = params.coherence - data_len;
  const double hi_raw = *params.peak_power * train_len / budget;
  const double lo_raw = hi_raw + 1.0 - *params.peak_power / params.avg_power;
  FeasibleInterval iv{std::max(0.0, lo_raw), std::min(1.0, hi_raw)};
  if (iv.lo > iv.hi)
    throw infeasible_error("feasible_alpha_interval: peak power admits no energy split");
  return iv;
}

ClippedAlpha optimal_alpha_clipped(const SystemParams& params, double data_len,
                                   ReceiverKind receiver) {
  const AlphaOptimum unconstrained = receiver == ReceiverKind::MRC
                                         ? optimal_alpha_mrc(params, data_len)
                                         : optimal_alpha_zf(params, data_len);
  const FeasibleInterval iv = feasible_alpha_interval(params, data_len);
  const double clipped = std::clamp(unconstrained.alpha, iv.lo, iv.hi);
  return {clipped, clipped != unconstrained.alpha};
}

double slab_snr(const SystemParams& params, ReceiverKind receiver, double alpha) {
  if (!params.peak_power) throw std::invalid_argument("slab_snr: no peak power configured");
  if (receiver == ReceiverKind::MMSE)
    throw std::invalid_argument("slab_snr: boundary coefficients cover mrc and zf");
  const double rho = params.avg_power;
  const double rmax = *params.peak_power;
  const double t = params.coherence;
  const double k = params.users;
  const double m = params.antennas;
  if (alpha <= 0.0 || alpha >= 1.0) return 0.0;

  const double rt = rho * t;
  double a, b, c, gain;
  if (receiver == ReceiverKind::MRC) {
    a = rt * rt * (k - 1.0) + rt * rt / rmax;
    b = rt * rt * (k - 1.0) + rho * t * t - rt * k - rt / rmax;
    c = k * rt + t;
    gain = m - 1.0;
  } else {
    a = rt * rt / rmax;
    b = rho * t * t - rt * k - rt / rmax;
    c = k * rt + t;
    gain = m - k;
  }
  const double num = alpha * (alpha - 1.0) * rt * rt * gain;
  const double den = a * alpha * alpha - b * alpha - c;
  if (den >= 0.0) return 0.0;  // boundary degeneracy (rho_max == rho at alpha -> 1)
  return num / den;
}

double slab_rate(const SystemParams& params, ReceiverKind receiver, double alpha) {
  const double rho = params.avg_power;
  const double t = params.coherence;
  if (!params.peak_power) throw std::invalid_argument("slab_rate: no peak power configured");
  const double data_len = t - rho * t * alpha / *params.peak_power;
  if (data_len <= 0.0) return 0.0;
  const double snr = slab_snr(params, receiver, alpha);
  return params.users / t * data_len * std::log1p(snr) * kLog2E;
}

namespace {

RateReport rate_at(const SystemParams& params, ReceiverKind receiver, double alpha,
                   double data_len) {
  return rate_for(receiver, make_split_continuous(params, alpha, data_len), params);
}

// Better of the floor/ceil integer durations, alpha re-projected per duration.
void fill_integer_schedule(OptimizationOutcome& out, const SystemParams& params,
                           ReceiverKind receiver) {
  const int max_data = params.coherence - params.users;
  int lo = std::clamp(static_cast<int>(std::floor(out.data_len)), 1, max_data);
  int hi = std::clamp(static_cast<int>(std::ceil(out.data_len)), 1, max_data);
  double best = -1.0;
  for (int cand : {lo, hi}) {
    double a = out.alpha;
    if (params.peak_power) {
      a = optimal_alpha_clipped(params, cand, receiver).alpha;
    } else {
      a = (receiver == ReceiverKind::MRC ? optimal_alpha_mrc(params, cand)
                                         : optimal_alpha_zf(params, cand))
              .alpha;
    }
    const RateReport rep = rate_at(params, receiver, a, cand);
    if (rep.sum_rate > best) {
      best = rep.sum_rate;
      out.sched_data_len = cand;
      out.sched_alpha = a;
      out.sched_rate = rep;
    }
    if (hi == lo) break;
  }
}

}  // namespace

OptimizationOutcome joint_optimize(const SystemParams& params, ReceiverKind receiver) {
  params.validate();
  if (receiver == ReceiverKind::MMSE)
    throw std::invalid_argument("joint_optimize: covers mrc and zf receivers");
  if (receiver == ReceiverKind::ZF && params.antennas <= params.users)
    throw std::invalid_argument("joint_optimize: zero forcing needs M > K");

  const double t = params.coherence;
  const double k = params.users;
  const double data_full = t - k;
  const double budget = params.avg_power * t;

  const AlphaOptimum interior = receiver == ReceiverKind::MRC
                                    ? optimal_alpha_mrc(params, data_full)
                                    : optimal_alpha_zf(params, data_full);

  OptimizationOutcome out;
  if (!params.peak_power || budget <= 0.0) {
    out.alpha = interior.alpha;
    out.data_len = data_full;
    out.case_label = OptCase::Interior;
    out.rate = rate_at(params, receiver, out.alpha, out.data_len);
    fill_integer_schedule(out, params, receiver);
    return out;
  }

  const double rmax = *params.peak_power;
  if (rmax * t < budget)
    throw infeasible_error("joint_optimize: peak power cannot carry the average energy budget");

  const double alpha1 = rmax * k / budget;
  const double alpha2 = 1.0 - rmax * data_full / budget;

  if (alpha1 < interior.alpha) {
    // Training power pinned at the peak; search the boundary line.
    const auto objective = [&](double a) { return slab_rate(params, receiver, a); };
    const GoldenResult g = golden_section_maximize(objective, alpha1, 1.0);
    out.alpha = g.x;
    out.data_len = t - budget * g.x / rmax;
    out.case_label = OptCase::PeakTraining;
    out.iterations = g.iterations;
    if (out.data_len > data_full) out.data_len = data_full;  // fp guard at the kink
    out.rate = rate_at(params, receiver, out.alpha, out.data_len);
  } else if (alpha2 > interior.alpha) {
    out.alpha = alpha2;
    out.data_len = data_full;
    out.case_label = OptCase::PeakData;
    out.rate = rate_at(params, receiver, out.alpha, out.data_len);
  } else {
    out.alpha = interior.alpha;
    out.data_len = data_full;
    out.case_label = OptCase::Interior;
    out.rate = rate_at(params, receiver, out.alpha, out.data_len);
  }
  fill_integer_schedule(out, params, receiver);
  return out;
}

OptimizationOutcome joint_optimize_asymptotic(double xi, double rho_u, int users, int coherence) {
  if (!(xi > 0.0 && xi <= 1.0))
    throw std::domain_error("joint_optimize_asymptotic: xi must lie in (0, 1]");
  if (!(rho_u > 0.0)) throw std::domain_error("joint_optimize_asymptotic: rho_u must be > 0");
  if (users < 1 || coherence <= users)
    throw std::domain_error("joint_optimize_asymptotic: need T > K >= 1");

  const double t = coherence;
  const double k = users;
  const double alpha1 = k / (xi * t);
  const double alpha2 = 1.0 - (t - k) / (xi * t);
  const double ru2 = rho_u * rho_u;

  const auto boundary_rate = [&](double a) {
    const double data_len = t * (1.0 - xi * a);
    if (data_len <= 0.0 || a >= 1.0 || a <= 0.0) return 0.0;
    return k * (1.0 - xi * a) * std::log1p(a * (1.0 - a) * ru2 * t / (1.0 - xi * a)) * kLog2E;
  };

  OptimizationOutcome out;
  double snr = 0.0;
  if (alpha1 < 0.5) {
    const GoldenResult g = golden_section_maximize(boundary_rate, alpha1, 1.0);
    out.alpha = g.x;
    out.data_len = t * (1.0 - xi * g.x);
    out.case_label = OptCase::PeakTraining;
    out.iterations = g.iterations;
    snr = out.alpha * (1.0 - out.alpha) * ru2 * t / (1.0 - xi * out.alpha);
  } else if (alpha2 > 0.5) {
    out.alpha = alpha2;
    out.data_len = t - k;
    out.case_label = OptCase::PeakData;
    snr = out.alpha * (1.0 - out.alpha) * ru2 * t * t / (t - k);
  } else {
    out.alpha = 0.5;
    out.data_len = t - k;
    out.case_label = OptCase::Interior;
    snr = ru2 * t * t / (4.0 * (t - k));
  }

  RateReport rep;
  rep.prelog = out.data_len / t;
  rep.snr = snr;
  rep.sum_rate = rep.prelog * k * std::log1p(snr) * kLog2E;
  rep.per_user_rate.assign(users, rep.sum_rate / k);
  rep.energy_efficiency = rep.sum_rate / rho_u;  // per unit of the scaled power
  out.rate = rep;

  // Integer schedule along the active boundary.
  const int max_data = coherence - users;
  const int lo = std::clamp(static_cast<int>(std::floor(out.data_len)), 1, max_data);
  const int hi = std::clamp(static_cast<int>(std::ceil(out.data_len)), 1, max_data);
  double best = -1.0;
  for (int cand : {lo, hi}) {
    double a = out.alpha;
    double r;
    if (out.case_label == OptCase::PeakTraining) {
      a = (1.0 - cand / t) / xi;
      r = boundary_rate(a);
    } else {
      r = cand / t * k * std::log1p(out.alpha * (1.0 - out.alpha) * ru2 * t * t / cand) * kLog2E;
    }
    if (r > best) {
      best = r;
      out.sched_data_len = cand;
      out.sched_alpha = a;
      out.sched_rate = rep;
      out.sched_rate.sum_rate = r;
      out.sched_rate.prelog = cand / t;
      out.sched_rate.per_user_rate.assign(users, r / k);
    }
    if (hi == lo) break;
  }
  return out;
}

}  // namespace mumimo
