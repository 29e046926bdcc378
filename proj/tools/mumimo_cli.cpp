// Experiment front end: parses flat key=value specs, runs rate sweeps,
// optimizations and Monte Carlo campaigns, and writes CSV tables.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "mumimo/experiment.hpp"

namespace {

int thread_budget() {
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (const char* env = std::getenv("MIMO_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
      std::cerr << "MIMO_THREADS must be a positive integer\n";
      std::exit(2);
    }
    threads = static_cast<int>(std::min<long>(threads, v));
  }
  return threads;
}

mumimo::ParseResult parse_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    mumimo::ParseResult r;
    r.errors.push_back("cannot open spec file: " + path);
    return r;
  }
  std::ostringstream text;
  text << file.rdbuf();
  return mumimo::parse_spec(text.str());
}

int run_spec(const mumimo::ExperimentSpec& spec) {
  std::vector<std::string> row_errors;
  const auto rows = mumimo::run_experiment(spec, thread_budget(), &row_errors);
  mumimo::emit_csv(rows, spec.out);
  std::cout << "wrote " << rows.size() << " rows to " << spec.out << "\n";
  for (const std::string& err : row_errors) std::cerr << "row failed: " << err << "\n";
  return row_errors.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-user MIMO uplink training/rate experiment runner"};
  app.require_subcommand(1);

  std::string spec_path;
  auto* run_cmd = app.add_subcommand("run", "run an experiment spec file");
  run_cmd->add_option("spec-file", spec_path, "flat key = value experiment spec")->required();

  std::string preset_name;
  std::string preset_out;
  std::uint64_t preset_seed = 0;
  bool have_seed = false;
  auto* preset_cmd = app.add_subcommand("preset", "run a built-in experiment preset");
  preset_cmd->add_option("name", preset_name, "preset name")->required();
  preset_cmd->add_option("--out", preset_out, "override the output path");
  preset_cmd->add_option("--seed", preset_seed, "override the RNG seed")
      ->each([&](const std::string&) { have_seed = true; });

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "check a spec file and report all errors");
  validate_cmd->add_option("spec-file", validate_path, "spec file to check")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      const auto parsed = parse_file(spec_path);
      if (!parsed.spec) {
        for (const std::string& err : parsed.errors) std::cerr << "error: " << err << "\n";
        return 1;
      }
      return run_spec(*parsed.spec);
    }
    if (preset_cmd->parsed()) {
      auto spec = mumimo::preset(preset_name);
      if (!spec) {
        std::cerr << "unknown preset '" << preset_name << "'; available:";
        for (const auto& name : mumimo::preset_names()) std::cerr << ' ' << name;
        std::cerr << "\n";
        return 1;
      }
      if (!preset_out.empty()) spec->out = preset_out;
      if (have_seed) spec->seed = preset_seed;
      return run_spec(*spec);
    }
    if (validate_cmd->parsed()) {
      const auto parsed = parse_file(validate_path);
      if (!parsed.spec) {
        for (const std::string& err : parsed.errors) std::cerr << "error: " << err << "\n";
        return 1;
      }
      std::cout << "OK\n";
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
