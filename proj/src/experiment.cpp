#include "mumimo/experiment.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "mumimo/monte_carlo.hpp"
#include "mumimo/parallel.hpp"

namespace mumimo {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  size_t e = s.find_last_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  return std::string(s.substr(b, e - b + 1));
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  errno = 0;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return errno == 0 && end == s.c_str() + s.size() && std::isfinite(out);
}

bool parse_long(const std::string& s, long long& out) {
  if (s.empty()) return false;
  errno = 0;
  char* end = nullptr;
  out = std::strtoll(s.c_str(), &end, 10);
  return errno == 0 && end == s.c_str() + s.size();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(trim(cur));
  return parts;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

const std::map<std::string, ExperimentKind> kKinds = {
    {"rate-sweep", ExperimentKind::RateSweep},
    {"optimize", ExperimentKind::Optimize},
    {"joint-optimize", ExperimentKind::JointOptimize},
    {"montecarlo", ExperimentKind::MonteCarlo},
    {"asymptotic", ExperimentKind::Asymptotic},
    {"energy-efficiency", ExperimentKind::EnergyEfficiency},
};

const std::map<std::string, Scheme> kSchemes = {
    {"equal-power", Scheme::EqualPower},
    {"avg-only", Scheme::AvgOnly},
    {"avg-and-peak", Scheme::AvgAndPeak},
};

const std::map<std::string, ReceiverKind> kReceivers = {
    {"mrc", ReceiverKind::MRC},
    {"zf", ReceiverKind::ZF},
    {"mmse", ReceiverKind::MMSE},
};

const std::map<std::string, SweepVar> kSweepVars = {
    {"rho", SweepVar::Rho},
    {"M", SweepVar::Antennas},
    {"K", SweepVar::Users},
    {"T", SweepVar::Coherence},
    {"rho_max_ratio", SweepVar::RhoMaxRatio},
};

constexpr const char* kKnownKeys[] = {"kind",        "M",           "K",
                                      "T",           "rho",         "rho_db",
                                      "rho_max_ratio", "units",     "sweep.var",
                                      "sweep.values", "sweep.range", "receivers",
                                      "schemes",     "n_blocks",    "seed",
                                      "out"};

struct KeyEntry {
  std::string value;
  int line = 0;
};

}  // namespace

std::string to_string(ExperimentKind kind) {
  for (const auto& [name, k] : kKinds)
    if (k == kind) return name;
  return "?";
}

std::string to_string(Scheme scheme) {
  for (const auto& [name, s] : kSchemes)
    if (s == scheme) return name;
  return "?";
}

std::string to_string(SweepVar var) {
  for (const auto& [name, v] : kSweepVars)
    if (v == var) return name;
  return "?";
}

ParseResult parse_spec(std::string_view text) {
  ParseResult result;
  auto& errors = result.errors;

  std::map<std::string, KeyEntry> table;
  {
    std::istringstream stream{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
      ++line_no;
      const size_t hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      const std::string line = trim(raw);
      if (line.empty()) continue;
      const size_t eq = line.find('=');
      if (eq == std::string::npos) {
        errors.push_back("line " + std::to_string(line_no) + ": expected 'key = value'");
        continue;
      }
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty()) {
        errors.push_back("line " + std::to_string(line_no) + ": empty key");
        continue;
      }
      const auto [it, inserted] = table.emplace(key, KeyEntry{value, line_no});
      if (!inserted)
        errors.push_back("duplicate key '" + key + "' on lines " + std::to_string(it->second.line) +
                         " and " + std::to_string(line_no));
    }
  }

  for (const auto& [key, entry] : table) {
    if (std::find_if(std::begin(kKnownKeys), std::end(kKnownKeys),
                     [&](const char* k) { return key == k; }) == std::end(kKnownKeys))
      errors.push_back("line " + std::to_string(entry.line) + ": unknown key '" + key + "'");
  }

  const auto lookup = [&](const char* key) -> const KeyEntry* {
    const auto it = table.find(key);
    return it == table.end() ? nullptr : &it->second;
  };
  const auto bad = [&](const char* key, const KeyEntry& e, const char* expect) {
    errors.push_back("line " + std::to_string(e.line) + ": key '" + std::string(key) +
                     "': expected " + expect + ", got '" + e.value + "'");
  };
  const auto get_int = [&](const char* key, long long lo, long long hi,
                           std::optional<long long>& out) {
    if (const KeyEntry* e = lookup(key)) {
      long long v;
      if (!parse_long(e->value, v))
        bad(key, *e, "an integer");
      else if (v < lo || v > hi)
        errors.push_back("line " + std::to_string(e->line) + ": key '" + std::string(key) +
                         "': value " + std::to_string(v) + " outside [" + std::to_string(lo) +
                         ", " + std::to_string(hi) + "]");
      else
        out = v;
    }
  };
  const auto get_double = [&](const char* key, std::optional<double>& out) {
    if (const KeyEntry* e = lookup(key)) {
      double v;
      if (!parse_double(e->value, v))
        bad(key, *e, "a real number");
      else
        out = v;
    }
  };

  ExperimentSpec spec;

  bool db_units = false;
  if (const KeyEntry* e = lookup("units")) {
    if (e->value == "db")
      db_units = true;
    else if (e->value != "linear")
      bad("units", *e, "'db' or 'linear'");
  }

  if (const KeyEntry* e = lookup("kind")) {
    const auto it = kKinds.find(e->value);
    if (it == kKinds.end())
      bad("kind", *e, "one of rate-sweep|optimize|joint-optimize|montecarlo|asymptotic|energy-efficiency");
    else
      spec.kind = it->second;
  } else {
    errors.push_back("missing required key 'kind'");
  }

  std::optional<long long> m, k, t, n_blocks, seed;
  get_int("M", 1, 1 << 20, m);
  get_int("K", 1, 1 << 20, k);
  get_int("T", 2, 1 << 20, t);
  get_int("n_blocks", 1, 1LL << 40, n_blocks);
  get_int("seed", 0, std::numeric_limits<long long>::max(), seed);
  if (!m) errors.push_back("missing required key 'M'");
  if (!k) errors.push_back("missing required key 'K'");
  if (!t) errors.push_back("missing required key 'T'");
  if (m) spec.antennas = static_cast<int>(*m);
  if (k) spec.users = static_cast<int>(*k);
  if (t) spec.coherence = static_cast<int>(*t);
  if (n_blocks) spec.n_blocks = *n_blocks;
  if (seed) spec.seed = static_cast<std::uint64_t>(*seed);
  if (k && t && *k >= *t) errors.push_back("constraint violated: need K < T");

  std::optional<double> rho_lin, rho_db, ratio;
  get_double("rho", rho_lin);
  get_double("rho_db", rho_db);
  get_double("rho_max_ratio", ratio);
  if (rho_lin && rho_db) errors.push_back("keys 'rho' and 'rho_db' are mutually exclusive");
  if (ratio) {
    if (*ratio < 1.0)
      errors.push_back("constraint violated: rho_max_ratio must be >= 1");
    else
      spec.peak_ratio = *ratio;
  }

  // Sweep.
  bool have_sweep_var = false;
  if (const KeyEntry* e = lookup("sweep.var")) {
    const auto it = kSweepVars.find(e->value);
    if (it == kSweepVars.end())
      bad("sweep.var", *e, "one of rho|M|K|T|rho_max_ratio");
    else {
      spec.sweep.var = it->second;
      have_sweep_var = true;
    }
  } else {
    errors.push_back("missing required key 'sweep.var'");
  }

  const KeyEntry* values_entry = lookup("sweep.values");
  const KeyEntry* range_entry = lookup("sweep.range");
  if (values_entry && range_entry)
    errors.push_back("keys 'sweep.values' and 'sweep.range' are mutually exclusive");
  std::vector<double> sweep_raw;
  bool have_sweep_list = false;
  if (values_entry && !range_entry) {
    bool ok = true;
    for (const std::string& part : split(values_entry->value, ',')) {
      double v;
      if (!parse_double(part, v)) {
        bad("sweep.values", *values_entry, "a comma-separated list of reals");
        ok = false;
        break;
      }
      sweep_raw.push_back(v);
    }
    have_sweep_list = ok;
  } else if (range_entry) {
    const auto parts = split(range_entry->value, ':');
    double start = 0, stop = 0, step = 0;
    if (parts.size() != 3 || !parse_double(parts[0], start) || !parse_double(parts[1], stop) ||
        !parse_double(parts[2], step) || step <= 0.0 || stop < start) {
      bad("sweep.range", *range_entry, "'start:stop:step' with step > 0 and stop >= start");
    } else {
      for (double v = start; v <= stop + 1e-9 * step; v += step) sweep_raw.push_back(v);
      have_sweep_list = true;
    }
  } else if (!values_entry) {
    errors.push_back("missing required key 'sweep.values' or 'sweep.range'");
  }

  if (have_sweep_var && have_sweep_list) {
    spec.sweep.display = sweep_raw;
    spec.sweep.values = sweep_raw;
    if (spec.sweep.var == SweepVar::Rho && db_units)
      for (double& v : spec.sweep.values) v = db_to_linear(v);
    if (spec.sweep.var != SweepVar::Rho) {
      for (double v : spec.sweep.values) {
        const bool integral = std::floor(v) == v && v >= 1.0;
        if ((spec.sweep.var == SweepVar::Antennas || spec.sweep.var == SweepVar::Users ||
             spec.sweep.var == SweepVar::Coherence) &&
            !integral) {
          errors.push_back("sweep over " + to_string(spec.sweep.var) +
                           " requires positive integer values");
          break;
        }
        if (spec.sweep.var == SweepVar::RhoMaxRatio && v < 1.0) {
          errors.push_back("sweep over rho_max_ratio requires values >= 1");
          break;
        }
      }
    }
  }

  // Base power: required unless rho itself is swept.
  if (rho_db) spec.avg_power = db_to_linear(*rho_db);
  if (rho_lin) spec.avg_power = db_units ? db_to_linear(*rho_lin) : *rho_lin;
  if (!rho_lin && !rho_db && !(have_sweep_var && spec.sweep.var == SweepVar::Rho))
    errors.push_back("missing required key 'rho' (or 'rho_db')");
  if ((rho_lin || rho_db) && !(spec.avg_power > 0.0))
    errors.push_back("constraint violated: rho must be > 0");

  if (const KeyEntry* e = lookup("receivers")) {
    std::vector<ReceiverKind> receivers;
    for (const std::string& part : split(e->value, ',')) {
      const auto it = kReceivers.find(part);
      if (it == kReceivers.end()) {
        bad("receivers", *e, "a comma-separated subset of mrc,zf,mmse");
        receivers.clear();
        break;
      }
      receivers.push_back(it->second);
    }
    if (!receivers.empty()) spec.receivers = receivers;
  }

  if (const KeyEntry* e = lookup("schemes")) {
    std::vector<Scheme> schemes;
    for (const std::string& part : split(e->value, ',')) {
      const auto it = kSchemes.find(part);
      if (it == kSchemes.end()) {
        bad("schemes", *e, "a comma-separated subset of equal-power,avg-only,avg-and-peak");
        schemes.clear();
        break;
      }
      schemes.push_back(it->second);
    }
    if (!schemes.empty()) spec.schemes = schemes;
  }

  if (const KeyEntry* e = lookup("out")) {
    if (e->value.empty())
      bad("out", *e, "a file path");
    else
      spec.out = e->value;
  }

  const bool wants_peak =
      std::find(spec.schemes.begin(), spec.schemes.end(), Scheme::AvgAndPeak) != spec.schemes.end() ||
      spec.kind == ExperimentKind::Asymptotic;
  if (wants_peak && !spec.peak_ratio &&
      !(have_sweep_var && spec.sweep.var == SweepVar::RhoMaxRatio))
    errors.push_back("scheme avg-and-peak (and kind asymptotic) requires 'rho_max_ratio'");

  const bool spatial = std::any_of(spec.receivers.begin(), spec.receivers.end(), [](ReceiverKind r) {
    return r != ReceiverKind::MRC;
  });
  if (spatial && m && k && have_sweep_var && spec.sweep.var != SweepVar::Antennas &&
      spec.sweep.var != SweepVar::Users && *m < *k)
    errors.push_back("constraint violated: zf/mmse receivers need M >= K");

  if (errors.empty()) result.spec = spec;
  return result;
}

namespace {

struct RowPlan {
  size_t sweep_index;
  ReceiverKind receiver;
  Scheme scheme;
};

SystemParams params_for(const ExperimentSpec& spec, double value) {
  SystemParams p;
  p.antennas = spec.antennas;
  p.users = spec.users;
  p.coherence = spec.coherence;
  p.avg_power = spec.avg_power;
  double ratio = spec.peak_ratio.value_or(0.0);
  switch (spec.sweep.var) {
    case SweepVar::Rho: p.avg_power = value; break;
    case SweepVar::Antennas: p.antennas = static_cast<int>(value); break;
    case SweepVar::Users: p.users = static_cast<int>(value); break;
    case SweepVar::Coherence: p.coherence = static_cast<int>(value); break;
    case SweepVar::RhoMaxRatio: ratio = value; break;
  }
  if (spec.power_tracks_antennas) p.avg_power = spec.avg_power / std::sqrt(p.antennas);
  if (ratio >= 1.0) p.peak_power = ratio * p.avg_power;
  return p;
}

ResultRow compute_row(const ExperimentSpec& spec, const RowPlan& plan, size_t row_index) {
  const double value = spec.sweep.values[plan.sweep_index];
  ResultRow row;
  row.swept_value = spec.sweep.display[plan.sweep_index];
  row.receiver = plan.receiver;
  row.scheme = plan.scheme;

  if (spec.kind == ExperimentKind::Asymptotic) {
    double ratio = spec.peak_ratio.value_or(0.0);
    if (spec.sweep.var == SweepVar::RhoMaxRatio) ratio = value;
    double rho_u = spec.avg_power;
    if (spec.sweep.var == SweepVar::Rho) rho_u = value;
    if (!(ratio >= 1.0)) throw std::invalid_argument("asymptotic run needs rho_max_ratio >= 1");
    const OptimizationOutcome oc =
        joint_optimize_asymptotic(1.0 / ratio, rho_u, spec.users, spec.coherence);
    row.sum_rate = oc.rate.sum_rate;
    row.energy_efficiency = oc.rate.energy_efficiency;
    row.alpha = oc.alpha;
    row.data_len = oc.data_len;
    row.case_label = oc.case_label;
    return row;
  }

  SystemParams params = params_for(spec, value);
  params.validate();
  if (plan.receiver == ReceiverKind::ZF && params.antennas <= params.users)
    throw std::invalid_argument("zero forcing needs M > K");
  if (plan.receiver == ReceiverKind::MMSE && params.antennas < params.users)
    throw std::invalid_argument("MMSE needs M >= K");

  const int data_full = params.coherence - params.users;
  RateReport report;
  double alpha = 0.0;
  double data_len = data_full;
  std::optional<OptCase> case_label;
  std::optional<std::pair<double, int>> mc_point;  // (alpha, integer T_d)

  switch (plan.scheme) {
    case Scheme::EqualPower: {
      alpha = static_cast<double>(params.users) / params.coherence;
      report = rate_for(plan.receiver, make_split(params, alpha, data_full), params);
      mc_point = {{alpha, data_full}};
      break;
    }
    case Scheme::AvgOnly: {
      const AlphaOptimum opt = plan.receiver == ReceiverKind::MRC
                                   ? optimal_alpha_mrc(params, data_full)
                                   : optimal_alpha_zf(params, data_full);
      alpha = opt.alpha;
      report = rate_for(plan.receiver, make_split(params, alpha, data_full), params);
      mc_point = {{alpha, data_full}};
      break;
    }
    case Scheme::AvgAndPeak: {
      if (!params.peak_power)
        throw std::invalid_argument("scheme avg-and-peak requires rho_max");
      if (plan.receiver == ReceiverKind::MMSE)
        throw std::invalid_argument("scheme avg-and-peak covers mrc and zf");
      if (spec.kind == ExperimentKind::Optimize) {
        const ClippedAlpha ca = optimal_alpha_clipped(params, data_full, plan.receiver);
        alpha = ca.alpha;
        report = rate_for(plan.receiver, make_split(params, alpha, data_full), params);
        mc_point = {{alpha, data_full}};
      } else {
        const OptimizationOutcome oc = joint_optimize(params, plan.receiver);
        alpha = oc.alpha;
        data_len = oc.data_len;
        case_label = oc.case_label;
        report = oc.rate;
        mc_point = {{oc.sched_alpha, oc.sched_data_len}};
      }
      break;
    }
  }

  row.sum_rate = report.sum_rate;
  row.energy_efficiency = params.avg_power > 0.0 ? report.sum_rate / params.avg_power : 0.0;
  row.alpha = alpha;
  row.data_len = data_len;
  row.case_label = case_label;

  if (spec.kind == ExperimentKind::MonteCarlo && mc_point) {
    TrialConfig trial;
    trial.params = params;
    trial.split = make_split(params, mc_point->first, mc_point->second);
    trial.receiver = plan.receiver;
    trial.n_blocks = spec.n_blocks;
    trial.seed = mix64(spec.seed ^ mix64(row_index + 1));
    const EmpiricalReport emp = run_campaign(trial);
    row.mc_rate = emp.mean_rate;
    row.mc_ci = emp.rate_ci_halfwidth;
  }
  return row;
}

std::string format_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::vector<ResultRow> run_experiment(const ExperimentSpec& spec, int threads,
                                      std::vector<std::string>* row_errors) {
  std::vector<RowPlan> plans;
  for (size_t vi = 0; vi < spec.sweep.values.size(); ++vi)
    for (const ReceiverKind r : spec.receivers)
      for (const Scheme s : spec.schemes) plans.push_back({vi, r, s});

  std::vector<std::optional<ResultRow>> slots(plans.size());
  std::vector<std::string> failures(plans.size());
  parallel_for_index(static_cast<long>(plans.size()), threads, [&](long i) {
    try {
      slots[i] = compute_row(spec, plans[i], static_cast<size_t>(i));
    } catch (const std::exception& ex) {
      std::ostringstream msg;
      msg << "sweep value " << format_g(spec.sweep.display[plans[i].sweep_index]) << " ("
          << to_string(plans[i].receiver) << ", " << to_string(plans[i].scheme)
          << "): " << ex.what();
      failures[i] = msg.str();
    }
  });

  std::vector<ResultRow> rows;
  rows.reserve(plans.size());
  for (size_t i = 0; i < plans.size(); ++i) {
    if (slots[i]) {
      rows.push_back(*slots[i]);
    } else if (row_errors) {
      row_errors->push_back(failures[i]);
    } else {
      throw std::runtime_error(failures[i]);
    }
  }
  return rows;
}

void emit_csv(const std::vector<ResultRow>& rows, std::ostream& os) {
  os << "swept_value,receiver,scheme,sum_rate,energy_efficiency,alpha_star,T_d_star,"
        "case_label,mc_rate,mc_ci\n";
  for (const ResultRow& r : rows) {
    os << format_g(r.swept_value) << ',' << to_string(r.receiver) << ',' << to_string(r.scheme)
       << ',' << format_g(r.sum_rate) << ',' << format_g(r.energy_efficiency) << ','
       << format_g(r.alpha) << ',' << format_g(r.data_len) << ','
       << (r.case_label ? to_string(*r.case_label) : "") << ','
       << (r.mc_rate ? format_g(*r.mc_rate) : "") << ',' << (r.mc_ci ? format_g(*r.mc_ci) : "")
       << '\n';
  }
}

void emit_csv(const std::vector<ResultRow>& rows, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  emit_csv(rows, file);
  file.flush();
  if (!file) throw std::runtime_error("write failed: " + path);
}

namespace {

ExperimentSpec preset_fig1() {
  ExperimentSpec s;
  s.kind = ExperimentKind::RateSweep;
  s.antennas = 20;
  s.users = 4;
  s.coherence = 196;
  s.sweep.var = SweepVar::Rho;
  for (int db = -10; db <= 20; db += 2) {
    s.sweep.display.push_back(db);
    s.sweep.values.push_back(db_to_linear(db));
  }
  s.receivers = {ReceiverKind::MRC, ReceiverKind::ZF, ReceiverKind::MMSE};
  s.schemes = {Scheme::EqualPower, Scheme::AvgOnly};
  s.out = "fig1.csv";
  return s;
}

ExperimentSpec preset_fig_image1() {
  ExperimentSpec s;
  s.kind = ExperimentKind::RateSweep;
  s.users = 10;
  s.coherence = 196;
  s.avg_power = db_to_linear(3.0);  // rho_u
  s.power_tracks_antennas = true;
  s.peak_ratio = 1.2;
  s.sweep.var = SweepVar::Antennas;
  for (int m : {20, 30, 50, 70, 100, 150, 220, 320, 450, 512}) {
    s.sweep.display.push_back(m);
    s.sweep.values.push_back(m);
  }
  s.antennas = 20;
  s.receivers = {ReceiverKind::MRC, ReceiverKind::ZF};
  s.schemes = {Scheme::EqualPower, Scheme::AvgOnly, Scheme::AvgAndPeak};
  s.out = "fig_image1.csv";
  return s;
}

ExperimentSpec preset_fig_image2() {
  ExperimentSpec s;
  s.kind = ExperimentKind::EnergyEfficiency;
  s.antennas = 30;
  s.users = 10;
  s.coherence = 196;
  s.peak_ratio = 1.2;
  s.sweep.var = SweepVar::Rho;
  for (int db = -20; db <= 10; db += 2) {
    s.sweep.display.push_back(db);
    s.sweep.values.push_back(db_to_linear(db));
  }
  s.receivers = {ReceiverKind::MRC, ReceiverKind::ZF};
  s.schemes = {Scheme::EqualPower, Scheme::AvgOnly, Scheme::AvgAndPeak};
  s.out = "fig_image2.csv";
  return s;
}

ExperimentSpec preset_fig_image3() {
  ExperimentSpec s = preset_fig_image2();
  s.antennas = 20;
  s.out = "fig_image3.csv";
  return s;
}

ExperimentSpec preset_fig_image4() {
  ExperimentSpec s;
  s.kind = ExperimentKind::RateSweep;
  s.antennas = 50;
  s.users = 10;
  s.coherence = 196;
  s.avg_power = db_to_linear(-10.0);
  s.sweep.var = SweepVar::RhoMaxRatio;
  for (double ratio : {1.05, 1.1, 1.2, 1.4, 1.7, 2.0, 3.0, 5.0, 8.0, 16.0, 32.0}) {
    s.sweep.display.push_back(ratio);
    s.sweep.values.push_back(ratio);
  }
  s.receivers = {ReceiverKind::MRC, ReceiverKind::ZF};
  s.schemes = {Scheme::AvgOnly, Scheme::AvgAndPeak};
  s.out = "fig_image4.csv";
  return s;
}

}  // namespace

std::optional<ExperimentSpec> preset(std::string_view name) {
  if (name == "fig1") return preset_fig1();
  if (name == "fig-image1") return preset_fig_image1();
  if (name == "fig-image2") return preset_fig_image2();
  if (name == "fig-image3") return preset_fig_image3();
  if (name == "fig-image4") return preset_fig_image4();
  return std::nullopt;
}

std::vector<std::string> preset_names() {
  return {"fig1", "fig-image1", "fig-image2", "fig-image3", "fig-image4"};
}

}  // namespace mumimo
