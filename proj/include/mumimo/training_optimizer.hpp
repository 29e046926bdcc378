#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "mumimo/link_model.hpp"
#include "mumimo/rate_engine.hpp"

namespace mumimo {

// Thrown when the peak-power constraints leave no feasible energy split.
struct infeasible_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Which constraint shapes the joint optimum.
enum class OptCase { PeakTraining, PeakData, Interior };

std::string to_string(OptCase c);  // "Case1-peak-training" etc.

struct AlphaOptimum {
  double alpha = 0.0;
  double objective = 0.0;  // maximized rho_eff (ZF) or post-combining SNR (MRC)
};

struct FeasibleInterval {
  double lo = 0.0;
  double hi = 1.0;
};

struct ClippedAlpha {
  double alpha = 0.0;
  bool clipped = false;
};

struct OptimizationOutcome {
  double alpha = 0.0;
  double data_len = 0.0;  // continuous on the peak-training boundary
  OptCase case_label = OptCase::Interior;
  bool clipped = false;   // peak projection active (fixed-duration mode only)
  RateReport rate;        // at (alpha, data_len)
  int iterations = 0;     // 1-D search iterations, 0 for closed forms
  // Integer schedule: floor/ceil of data_len evaluated, better kept, with
  // alpha re-projected onto the feasible interval of the rounded duration.
  int sched_data_len = 0;
  double sched_alpha = 0.0;
  RateReport sched_rate;
};

struct GoldenResult {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
};

// Derivative-free maximization of a quasiconcave function on [lo, hi].
GoldenResult golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                                     double tol = 1e-10, int max_iter = 200);

// Closed-form alpha maximizing the effective SNR for a fixed data duration,
// together with the maximized rho_eff. data_len in [1, T-K].
AlphaOptimum optimal_alpha_zf(const SystemParams& params, double data_len);

// Closed-form alpha maximizing the MRC post-combining SNR for a fixed data
// duration, together with that SNR. Coincides with the ZF optimizer since
// both objectives increase with rho_eff; kept on its own algebraic route.
AlphaOptimum optimal_alpha_mrc(const SystemParams& params, double data_len);

// Alphas admissible under the peak power cap for a fixed data duration:
// [max(0, rho_max T_tau/(rho T) + 1 - rho_max/rho), min(1, rho_max T_tau/(rho T))].
// Throws infeasible_error when empty.
FeasibleInterval feasible_alpha_interval(const SystemParams& params, double data_len);

// Unconstrained optimum projected onto the feasible interval; concavity in
// alpha makes the projection optimal.
ClippedAlpha optimal_alpha_clipped(const SystemParams& params, double data_len,
                                   ReceiverKind receiver);

// Post-combining SNR along the peak-training boundary T_d = T - rho T alpha / rho_max.
double slab_snr(const SystemParams& params, ReceiverKind receiver, double alpha);

// Sum rate along the same boundary; quasiconcave in alpha.
double slab_rate(const SystemParams& params, ReceiverKind receiver, double alpha);

// Joint (alpha, T_d) optimization under average and peak power constraints
// for MRC or ZF. Dispatches over three cases: training power pinned at the
// peak (1-D quasiconcave search on the boundary), data power pinned at the
// peak, or interior optimum at T_d = T - K. Without a peak cap the interior
// solution applies directly.
OptimizationOutcome joint_optimize(const SystemParams& params, ReceiverKind receiver);

// Large-array limit of the joint optimization at fixed rho_u = sqrt(M) rho
// and peak ratio xi = rho / rho_max in (0, 1].
OptimizationOutcome joint_optimize_asymptotic(double xi, double rho_u, int users, int coherence);

}  // namespace mumimo
