#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mumimo/link_model.hpp"
#include "mumimo/rate_engine.hpp"
#include "mumimo/training_optimizer.hpp"

namespace mumimo {

enum class ExperimentKind { RateSweep, Optimize, JointOptimize, MonteCarlo, Asymptotic, EnergyEfficiency };
enum class Scheme { EqualPower, AvgOnly, AvgAndPeak };
enum class SweepVar { Rho, Antennas, Users, Coherence, RhoMaxRatio };

std::string to_string(ExperimentKind kind);
std::string to_string(Scheme scheme);
std::string to_string(SweepVar var);

struct SweepSpec {
  SweepVar var = SweepVar::Rho;
  std::vector<double> values;   // linear scale, ready to apply
  std::vector<double> display;  // as supplied (dB when units = db)
};

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::RateSweep;
  int antennas = 1;
  int users = 1;
  int coherence = 2;
  double avg_power = 1.0;  // linear; for kind=asymptotic this is rho_u
  std::optional<double> peak_ratio;  // rho_max / rho
  SweepSpec sweep;
  std::vector<ReceiverKind> receivers = {ReceiverKind::MRC, ReceiverKind::ZF};
  std::vector<Scheme> schemes = {Scheme::AvgOnly};
  long n_blocks = 10000;
  std::uint64_t seed = 1;
  std::string out = "results.csv";
  // Preset-only: interpret avg_power as rho_u and use rho = rho_u / sqrt(M)
  // at every sweep point (antenna sweeps at fixed large-array power).
  bool power_tracks_antennas = false;
};

struct ResultRow {
  double swept_value = 0.0;  // display units
  ReceiverKind receiver = ReceiverKind::MRC;
  Scheme scheme = Scheme::AvgOnly;
  double sum_rate = 0.0;
  double energy_efficiency = 0.0;
  double alpha = 0.0;
  double data_len = 0.0;
  std::optional<OptCase> case_label;
  std::optional<double> mc_rate;
  std::optional<double> mc_ci;
};

struct ParseResult {
  std::optional<ExperimentSpec> spec;
  std::vector<std::string> errors;  // every problem found, not just the first
};

// Flat key = value configuration with '#' comments. Returns either a
// validated spec or the full error list.
ParseResult parse_spec(std::string_view text);

// One row per (sweep value x receiver x scheme), in that order. Failed rows
// are reported through row_errors when given, otherwise the first failure
// throws. Sweep points are evaluated in parallel; ordering is unaffected.
std::vector<ResultRow> run_experiment(const ExperimentSpec& spec, int threads = 1,
                                      std::vector<std::string>* row_errors = nullptr);

void emit_csv(const std::vector<ResultRow>& rows, std::ostream& os);
void emit_csv(const std::vector<ResultRow>& rows, const std::string& path);

std::optional<ExperimentSpec> preset(std::string_view name);
std::vector<std::string> preset_names();

}  // namespace mumimo
